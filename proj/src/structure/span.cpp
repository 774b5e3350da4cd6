#include "simat/structure/span.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "simat/structure/zmod.hpp"

namespace simat {

namespace {

void require_same_family(const std::vector<SuperIntervalMatrix>& ms) {
  for (std::size_t i = 1; i < ms.size(); ++i) {
    if (ms[i].domain() != ms[0].domain())
      throw DomainMismatch("generators live in different domains");
    if (!same_type(ms[i].partition(), ms[0].partition()))
      throw TypeMismatch("generators are not of the same type");
  }
}

std::vector<std::uint64_t> flatten_residues(const SuperIntervalMatrix& m) {
  std::vector<std::uint64_t> out;
  out.reserve(m.endpoints().size());
  for (const Scalar& e : m.endpoints()) out.push_back(e.as_u64());
  return out;
}

SuperIntervalMatrix unflatten_residues(const ScalarDomain& d, const PartitionSpec& p,
                                       const std::vector<std::uint64_t>& v) {
  std::vector<Scalar> e;
  e.reserve(v.size());
  for (std::uint64_t x : v) e.emplace_back(x);
  return SuperIntervalMatrix::build(d, p, std::move(e));
}

SuperIntervalMatrix combine(const std::vector<SuperIntervalMatrix>& gens,
                            const std::vector<Scalar>& coeffs) {
  SuperIntervalMatrix acc = scalar_mul(coeffs[0], gens[0]);
  for (std::size_t i = 1; i < gens.size(); ++i)
    acc = add(acc, scalar_mul(coeffs[i], gens[i]));
  return acc;
}

/// Depth-first bounded-coefficient membership for the nonnegative ordered
/// domains, where partial sums are monotone: any cell overshooting the target
/// prunes the branch. Never used over Residues (modular sums wrap).
struct BoundedSearch {
  const std::vector<SuperIntervalMatrix>& gens;
  const std::vector<Scalar>& coeffs;  // candidate values, ascending, starts at 0
  const ScalarDomain& domain;
  const std::vector<Scalar>& target;
  std::uint64_t nodes = 0;
  std::uint64_t node_cap;
  std::vector<Scalar> chosen;
  bool complete = true;

  bool run(std::size_t gi, std::vector<Scalar>& partial) {
    if (++nodes > node_cap) {
      complete = false;
      return false;
    }
    if (gi == gens.size()) {
      return partial == target;
    }
    const auto& g = gens[gi].endpoints();
    for (const Scalar& c : coeffs) {
      std::vector<Scalar> next = partial;
      bool feasible = true;
      for (std::size_t cell = 0; cell < next.size() && feasible; ++cell) {
        if (c.is_zero()) break;
        try {
          next[cell] = scalar_add(domain, next[cell], scalar_mul(domain, c, g[cell]));
        } catch (const DomainOverflow&) {
          feasible = false;  // unit-domain sums past 1 can never reach the target
          break;
        }
        if (target[cell] < next[cell]) feasible = false;
      }
      if (!feasible) continue;
      chosen[gi] = c;
      if (run(gi + 1, next)) return true;
      if (!complete) return false;
    }
    chosen[gi] = Scalar(0);
    return false;
  }
};

/// Plain odometer over a finite coefficient list; exact but unpruned. Used
/// where sums are not monotone (Residues with an explicit scalar set).
std::optional<std::vector<Scalar>> enumerate_membership(
    const SuperIntervalMatrix& target, const std::vector<SuperIntervalMatrix>& gens,
    const std::vector<Scalar>& coeffs, std::uint64_t limit) {
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (combos > limit / coeffs.size())
      throw BudgetExceeded("span membership: coefficient combinations exceed the limit");
    combos *= coeffs.size();
  }
  std::vector<std::size_t> idx(gens.size(), 0);
  std::vector<Scalar> cvals(gens.size(), Scalar(0));
  bool more = true;
  while (more) {
    for (std::size_t i = 0; i < idx.size(); ++i) cvals[i] = coeffs[idx[i]];
    if (combine(gens, cvals) == target) return cvals;
    more = false;
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (++idx[i] < coeffs.size()) {
        more = true;
        break;
      }
      idx[i] = 0;
    }
  }
  return std::nullopt;
}

}  // namespace

SpanResult span(const std::vector<SuperIntervalMatrix>& generators,
                const ScalarActionSpec& action, const Budget& budget) {
  action.validate();
  SpanResult out;
  out.truncated = !action.finite();
  if (generators.empty()) return out;
  require_same_family(generators);

  std::vector<Scalar> coeffs = action.coefficients(budget.coeff_bound);
  std::sort(coeffs.begin(), coeffs.end());

  // Combination count guard: |coeffs|^gens enumerations.
  std::uint64_t combos = 1;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (combos > budget.exhaustive_limit / coeffs.size())
      throw BudgetExceeded("span: coefficient combinations exceed the exhaustive limit");
    combos *= coeffs.size();
  }
  if (combos > budget.exhaustive_limit)
    throw BudgetExceeded("span: coefficient combinations exceed the exhaustive limit");

  std::set<std::vector<Scalar>> seen;
  std::vector<std::size_t> idx(generators.size(), 0);
  std::vector<Scalar> cvals(generators.size(), Scalar(0));
  bool more = true;
  while (more) {
    for (std::size_t i = 0; i < idx.size(); ++i) cvals[i] = coeffs[idx[i]];
    SuperIntervalMatrix m = combine(generators, cvals);
    if (seen.insert(m.endpoints()).second) out.elements.push_back(std::move(m));
    more = false;
    for (std::size_t i = idx.size(); i-- > 0;) {
      if (++idx[i] < coeffs.size()) {
        more = true;
        break;
      }
      idx[i] = 0;
    }
  }
  return out;
}

SpanMembership span_contains(const SuperIntervalMatrix& target,
                             const std::vector<SuperIntervalMatrix>& generators,
                             const ScalarActionSpec& action, const Budget& budget) {
  action.validate();
  SpanMembership out;
  if (generators.empty()) {
    out.member = target.is_zero();
    out.search_complete = true;
    return out;
  }
  std::vector<SuperIntervalMatrix> all = generators;
  all.push_back(target);
  require_same_family(all);

  const ScalarDomain& d = target.domain();
  if (d.is_residues() && !action.scalar_set && action.scalar_domain == d) {
    // Full Z_n coefficients: exact submodule membership via the Howell form.
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& g : generators) rows.push_back(flatten_residues(g));
    zmod::Module mod(d.modulus(), target.endpoints().size(), std::move(rows));
    out.member = mod.contains(flatten_residues(target));
    out.search_complete = true;
    if (out.member) {
      // Recover one coefficient vector by bounded search over Z_n.
      ScalarActionSpec finite = action;
      Budget b2 = budget;
      b2.coeff_bound = static_cast<int>(d.modulus()) - 1;
      // fall through to DFS below for the certificate
      std::vector<Scalar> coeffs = finite.coefficients(b2.coeff_bound);
      std::sort(coeffs.begin(), coeffs.end());
      // Residue sums are not monotone; certificate search enumerates.
      std::vector<std::size_t> idx(generators.size(), 0);
      std::uint64_t combos = 1;
      bool enumerable = true;
      for (std::size_t i = 0; i < generators.size(); ++i) {
        if (combos > budget.exhaustive_limit / coeffs.size()) {
          enumerable = false;
          break;
        }
        combos *= coeffs.size();
      }
      if (enumerable) {
        std::vector<Scalar> cvals(generators.size(), Scalar(0));
        bool more = true;
        while (more) {
          for (std::size_t i = 0; i < idx.size(); ++i) cvals[i] = coeffs[idx[i]];
          if (combine(generators, cvals) == target) {
            out.coefficients = cvals;
            break;
          }
          more = false;
          for (std::size_t i = idx.size(); i-- > 0;) {
            if (++idx[i] < coeffs.size()) {
              more = true;
              break;
            }
            idx[i] = 0;
          }
        }
      }
    }
    return out;
  }

  std::vector<Scalar> coeffs = action.coefficients(budget.coeff_bound);
  std::sort(coeffs.begin(), coeffs.end());

  if (d.is_residues()) {
    // Restricted scalar sets (or mismatched scalar moduli) over Z_n: modular
    // sums wrap, so enumerate instead of pruning.
    auto found = enumerate_membership(target, generators, coeffs,
                                      budget.exhaustive_limit);
    out.member = found.has_value();
    out.search_complete = true;
    if (found) out.coefficients = *found;
    return out;
  }

  // Nonnegative ordered domains: DFS with monotone pruning.
  BoundedSearch search{generators, coeffs, d, target.endpoints(), 0,
                       std::max<std::uint64_t>(budget.exhaustive_limit, 1) * 100,
                       std::vector<Scalar>(generators.size(), Scalar(0)), true};
  std::vector<Scalar> zero_partial(target.endpoints().size(), Scalar(0));
  bool found = search.run(0, zero_partial);
  if (!search.complete && !found)
    throw BudgetExceeded("span membership search exceeded its node budget");
  out.member = found;
  out.search_complete = search.complete;
  if (found) out.coefficients = search.chosen;
  return out;
}

IndependenceResult is_independent(const std::vector<SuperIntervalMatrix>& set,
                                  const ScalarActionSpec& action, IndependenceMode mode,
                                  const Budget& budget) {
  if (set.empty()) throw Error("independence of the empty set is not defined here");
  require_same_family(set);
  action.validate();
  IndependenceResult out;

  if (mode == IndependenceMode::Pairwise) {
    const ScalarDomain& sd = set[0].domain();
    for (std::size_t i = 0; i < set.size(); ++i)
      for (std::size_t j = 0; j < set.size(); ++j) {
        if (i == j) continue;
        // Does some scalar s give set[i] == s * set[j]?
        std::optional<Scalar> found;
        if (set[j].is_zero()) {
          if (set[i].is_zero()) found = Scalar(0);
        } else if (sd.is_residues() || action.scalar_set) {
          for (const Scalar& s : action.coefficients(budget.coeff_bound))
            if (scalar_mul(s, set[j]) == set[i]) {
              found = s;
              break;
            }
        } else {
          // Solve s exactly from the first nonzero cell, then verify.
          std::size_t cell = 0;
          while (set[j].endpoints()[cell].is_zero()) ++cell;
          const Scalar& num = set[i].endpoints()[cell];
          const Scalar& den = set[j].endpoints()[cell];
          Scalar s = Scalar::fraction(num.numerator() * den.denominator(),
                                      num.denominator() * den.numerator());
          if (valid_in(action.scalar_domain, s) && scalar_mul(s, set[j]) == set[i]) found = s;
        }
        if (found) {
          out.independent = false;
          out.element = i;
          out.relation = {{j, *found}};
          out.note = "set[" + std::to_string(i) + "] = " + found->str() + " * set[" +
                     std::to_string(j) + "]";
          return out;
        }
      }
    out.note = "no element is a scalar multiple of another";
    return out;
  }

  // Combination mode: no element lies in the bounded span of the others.
  for (std::size_t i = 0; i < set.size(); ++i) {
    std::vector<SuperIntervalMatrix> others;
    std::vector<std::size_t> other_index;
    for (std::size_t j = 0; j < set.size(); ++j)
      if (j != i) {
        others.push_back(set[j]);
        other_index.push_back(j);
      }
    SpanMembership m = span_contains(set[i], others, action, budget);
    if (m.member) {
      out.independent = false;
      out.element = i;
      for (std::size_t t = 0; t < other_index.size(); ++t)
        if (!m.coefficients.empty() && !m.coefficients[t].is_zero())
          out.relation.emplace_back(other_index[t], m.coefficients[t]);
      out.note = "set[" + std::to_string(i) + "] is a combination of the others";
      return out;
    }
    if (!m.search_complete)
      throw BudgetExceeded("independence verdict unknown: bounded search incomplete");
  }
  out.note = action.finite() ? "independent (exhaustive over the scalar set)"
                             : "independent within the coefficient bound";
  return out;
}

GeneratingSet find_generating_set(const CarrierSpec& c, const ScalarActionSpec& action,
                                  const Budget& budget) {
  c.validate();
  action.validate();
  CarrierEnumerator en(c);
  auto finite = en.size_within(budget.exhaustive_limit);
  if (!finite) throw BudgetExceeded("generating-set search needs an enumerable carrier");

  GeneratingSet out;
  out.carrier_size = *c.cardinality();

  std::set<std::vector<Scalar>> spanned;
  spanned.insert(c.zero().endpoints());

  auto respan = [&]() {
    SpanResult s = span(out.generators, action, budget);
    spanned.clear();
    spanned.insert(c.zero().endpoints());
    for (const auto& m : s.elements) spanned.insert(m.endpoints());
  };

  while (spanned.size() < *finite) {
    std::vector<std::size_t> idx;
    en.first(idx);
    bool appended = false;
    do {
      SuperIntervalMatrix cand = en.matrix(idx);
      if (!spanned.count(cand.endpoints())) {
        out.generators.push_back(std::move(cand));
        respan();
        appended = true;
        break;
      }
    } while (en.next(idx));
    if (!appended) break;  // carrier exhausted
  }
  return out;
}

BasisDemo independent_exceeds_basis_demo(const Budget& budget) {
  ScalarDomain nat = ScalarDomain::nat();
  PartitionSpec p(1, 4, {}, {1, 3});
  auto mk = [&](long long a, long long b, long long c, long long d) {
    return SuperIntervalMatrix::build(nat, p, {Scalar(a), Scalar(b), Scalar(c), Scalar(d)});
  };
  BasisDemo demo{
      {mk(1, 0, 0, 0), mk(0, 1, 0, 0), mk(0, 0, 0, 1), mk(0, 0, 1, 0)},
      {mk(1, 1, 3, 0), mk(0, 4, 7, 0), mk(0, 0, 0, 5), mk(1, 0, 0, 2), mk(0, 9, 0, 13)},
      mk(0, 0, 0, 1)};

  ScalarActionSpec action;
  action.kind = ActionKind::TypeI;
  action.scalar_domain = nat;

  if (!is_independent(demo.basis, action, IndependenceMode::Combination, budget).independent)
    throw Error("internal: the 4-element basis failed its independence re-check");
  if (!is_independent(demo.independent_set, action, IndependenceMode::Combination, budget)
           .independent)
    throw Error("internal: the 5-element set failed its independence re-check");

  // The basis spans every grid in a small slice of the carrier.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d)
          if (!span_contains(mk(a, b, c, d), demo.basis, action, budget).member)
            throw Error("internal: the basis failed to span the slice");

  // Find the least grid outside the larger set's span: it is not a basis.
  bool found = false;
  for (int a = 0; a < 4 && !found; ++a)
    for (int b = 0; b < 4 && !found; ++b)
      for (int c = 0; c < 4 && !found; ++c)
        for (int d = 0; d < 4 && !found; ++d) {
          SuperIntervalMatrix cand = mk(a, b, c, d);
          if (!span_contains(cand, demo.independent_set, action, budget).member) {
            demo.non_spanned_witness = cand;
            found = true;
          }
        }
  if (!found) throw Error("internal: the 5-element set unexpectedly spans the slice");
  return demo;
}

StructureReport check_direct_sum(const std::vector<std::vector<SuperIntervalMatrix>>& parts,
                                 const CarrierSpec& whole, const ScalarActionSpec& action,
                                 const Budget& budget) {
  whole.validate();
  action.validate();
  if (parts.empty()) throw Error("direct-sum check needs at least one part");
  for (const auto& part : parts)
    for (const auto& g : part)
      if (!whole.contains(g))
        throw GeneratorOutsideCarrier("a part generator is outside the carrier");

  StructureReport rep;
  rep.subject = "direct sum of generated subspaces";
  rep.seed = budget.seed;
  rep.carrier_size = whole.cardinality();

  const ScalarDomain& d = whole.domain;
  if (!d.is_residues())
    throw BudgetExceeded(
        "direct-sum coverage over infinite scalar domains is not decidable here");
  if (action.scalar_set || action.scalar_domain != d)
    throw Error("direct-sum subspaces need the full scalar action of " + d.tag());

  std::uint64_t n = d.modulus();
  std::size_t width = static_cast<std::size_t>(whole.cells());

  std::vector<zmod::Module> modules;
  for (const auto& part : parts) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& g : part) rows.push_back(flatten_residues(g));
    modules.emplace_back(n, width, std::move(rows));
  }

  // Sum coverage: the union of the parts' generators must span every pattern
  // class indicator of the carrier.
  std::vector<std::vector<std::uint64_t>> all_rows;
  for (const auto& part : parts)
    for (const auto& g : part) all_rows.push_back(flatten_residues(g));
  zmod::Module sum_module(n, width, std::move(all_rows));

  bool covers = true;
  SuperIntervalMatrix uncovered = whole.zero();
  for (int cls = 0; cls < whole.classes(); ++cls) {
    std::vector<std::uint64_t> ind(width, 0);
    for (int cell = 0; cell < whole.cells(); ++cell) {
      int cc = whole.pattern ? (*whole.pattern)[static_cast<std::size_t>(cell)] : cell;
      if (cc == cls) ind[static_cast<std::size_t>(cell)] = 1;
    }
    if (!sum_module.contains(ind)) {
      covers = false;
      uncovered = unflatten_residues(d, whole.partition, ind);
      break;
    }
  }
  if (covers)
    rep.add("sum-covers-whole", Verdict::HoldsExhaustive, {},
            "every class indicator lies in the sum of the parts");
  else
    rep.add("sum-covers-whole", Verdict::Fails, {uncovered},
            "the witness grid is not reached by the sum of the parts");

  // Pairwise intersections: enumerate the smaller span, membership-test into
  // the other part's module. Enumeration is exact, so an empty result really
  // is a trivial intersection.
  bool all_trivial = true;
  std::map<std::size_t, std::vector<std::vector<std::uint64_t>>> span_cache;
  auto enumerate_span = [&](std::size_t pi) -> const std::vector<std::vector<std::uint64_t>>& {
    auto it = span_cache.find(pi);
    if (it != span_cache.end()) return it->second;
    BigInt size = modules[pi].size();
    if (size > budget.exhaustive_limit)
      throw BudgetExceeded("direct-sum: part " + std::to_string(pi) +
                           " span exceeds the exhaustive limit");
    // Worklist closure under generator addition; scalar multiples are sums.
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<std::vector<std::uint64_t>> work;
    std::vector<std::vector<std::uint64_t>> gens;
    for (const auto& g : parts[pi]) gens.push_back(flatten_residues(g));
    std::vector<std::uint64_t> zero(width, 0);
    seen.insert(zero);
    work.push_back(zero);
    while (!work.empty()) {
      std::vector<std::uint64_t> cur = work.back();
      work.pop_back();
      for (const auto& g : gens) {
        std::vector<std::uint64_t> nxt(width);
        for (std::size_t t = 0; t < width; ++t) nxt[t] = (cur[t] + g[t]) % n;
        if (seen.insert(nxt).second) {
          if (seen.size() > budget.exhaustive_limit)
            throw BudgetExceeded("direct-sum: span closure exceeded the exhaustive limit");
          work.push_back(std::move(nxt));
        }
      }
    }
    return span_cache
        .emplace(pi, std::vector<std::vector<std::uint64_t>>(seen.begin(), seen.end()))
        .first->second;
  };

  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      std::size_t small = modules[i].size() <= modules[j].size() ? i : j;
      std::size_t big = small == i ? j : i;
      const auto& span_small = enumerate_span(small);
      std::vector<std::uint64_t> witness;
      for (const auto& v : span_small) {
        bool zero = true;
        for (std::uint64_t x : v) zero &= (x == 0);
        if (zero) continue;
        if (modules[big].contains(v)) {
          witness = v;
          break;
        }
      }
      std::string pair_name =
          "intersection(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (witness.empty()) {
        rep.add(pair_name, Verdict::HoldsExhaustive, {}, "trivial");
      } else {
        all_trivial = false;
        rep.add(pair_name, Verdict::Fails,
                {unflatten_residues(d, whole.partition, witness)},
                "nonzero element common to both parts");
      }
    }

  if (covers && all_trivial)
    rep.add("classification", Verdict::HoldsExhaustive, {}, "direct-sum");
  else if (covers)
    rep.add("classification", Verdict::HoldsExhaustive, {},
            "pseudo-direct-sum: parts cover the carrier but intersections overlap");
  else
    rep.add("classification", Verdict::Fails, {uncovered}, "parts do not cover the carrier");
  return rep;
}

}  // namespace simat
