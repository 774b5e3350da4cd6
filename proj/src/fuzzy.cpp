#include "simat/fuzzy.hpp"

namespace simat {

namespace {

void require_fuzzy_pair(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b) {
  if (a.domain() != b.domain() || !a.domain().is_unit())
    throw DomainMismatch("fuzzy composition needs two unit-domain matrices");
  if (!same_type(a.partition(), b.partition()))
    throw TypeMismatch("fuzzy min/max needs matrices of the same type");
}

void require_fuzzy_scalar(const Scalar& b, const SuperIntervalMatrix& a) {
  if (!a.domain().is_unit())
    throw DomainMismatch("fuzzy scalar products act on unit-domain matrices");
  if (!valid_in(ScalarDomain::unit(), b))
    throw ScalarOutOfRange("scalar " + b.str() + " is outside [0,1]");
}

SuperIntervalMatrix entrywise(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b,
                              Scalar (*op)(const ScalarDomain&, const Scalar&, const Scalar&)) {
  std::vector<Scalar> out;
  out.reserve(a.endpoints().size());
  for (std::size_t k = 0; k < a.endpoints().size(); ++k)
    out.push_back(op(a.domain(), a.endpoints()[k], b.endpoints()[k]));
  return SuperIntervalMatrix::build(a.domain(), a.partition(), std::move(out));
}

SuperIntervalMatrix scalarwise(const Scalar& b, const SuperIntervalMatrix& a,
                               Scalar (*op)(const ScalarDomain&, const Scalar&, const Scalar&)) {
  std::vector<Scalar> out;
  out.reserve(a.endpoints().size());
  for (const Scalar& e : a.endpoints()) out.push_back(op(a.domain(), b, e));
  return SuperIntervalMatrix::build(a.domain(), a.partition(), std::move(out));
}

}  // namespace

SuperIntervalMatrix fuzzy_min(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b) {
  require_fuzzy_pair(a, b);
  return entrywise(a, b, &scalar_min);
}

SuperIntervalMatrix fuzzy_max(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b) {
  require_fuzzy_pair(a, b);
  return entrywise(a, b, &scalar_max);
}

SuperIntervalMatrix fuzzy_scalar_min(const Scalar& b, const SuperIntervalMatrix& a) {
  require_fuzzy_scalar(b, a);
  return scalarwise(b, a, &scalar_min);
}

SuperIntervalMatrix fuzzy_scalar_max(const Scalar& b, const SuperIntervalMatrix& a) {
  require_fuzzy_scalar(b, a);
  return scalarwise(b, a, &scalar_max);
}

SuperIntervalMatrix fuzzy_scalar_prod(const Scalar& b, const SuperIntervalMatrix& a) {
  require_fuzzy_scalar(b, a);
  return scalarwise(b, a, &scalar_mul);
}

Scalar EtaMap::apply(const Scalar& a) const {
  const ScalarDomain unit = ScalarDomain::unit();
  Scalar image;
  if (a.is_zero()) {
    image = eta_zero;
  } else if (rule == Rule::Reciprocal) {
    image = Scalar::fraction(a.denominator(), a.numerator());
  } else {
    image = a.is_integer() ? class_int : class_frac;
  }
  if (!valid_in(unit, image))
    throw ImageEscape("eta(" + a.str() + ") = " + image.str() + " leaves [0,1]");
  return image;
}

SuperIntervalMatrix fuzzify(const SuperIntervalMatrix& a, const EtaMap& eta) {
  if (a.domain().is_unit())
    throw DomainMismatch("fuzzify expects a non-unit source matrix");
  std::vector<Scalar> out;
  out.reserve(a.endpoints().size());
  for (const Scalar& e : a.endpoints()) out.push_back(eta.apply(e));
  return SuperIntervalMatrix::build(ScalarDomain::unit(), a.partition(), std::move(out));
}

StructureReport audit_eta(const EtaMap& eta, const CarrierSpec& carrier, const Budget& budget) {
  carrier.validate();
  if (carrier.op != CarrierOp::Add)
    throw Error("audit-eta checks the additive inequality; carrier op must be add");
  StructureReport report;
  report.subject = "eta superadditivity: eta(a+b) >= min(eta(a), eta(b))";
  report.seed = budget.seed;

  // The inequality is entrywise, so endpoint pairs decide it.
  std::vector<Scalar> pool = carrier.effective_pool();
  const ScalarDomain& d = carrier.domain;
  const ScalarDomain unit = ScalarDomain::unit();

  std::vector<SuperIntervalMatrix> witnesses;
  std::size_t counterexamples = 0;
  const std::size_t max_witnesses = 16;
  bool exhaustive = carrier.pool_is_universe();
  std::uint64_t pairs_checked = 0;

  for (const Scalar& a : pool) {
    for (const Scalar& b : pool) {
      if (++pairs_checked > budget.exhaustive_limit * 10) {
        exhaustive = false;
        break;
      }
      Scalar sum = scalar_add(d, a, b);
      Scalar lhs = eta.apply(sum);
      Scalar rhs = scalar_min(unit, eta.apply(a), eta.apply(b));
      if (lhs < rhs) {
        ++counterexamples;
        if (witnesses.size() < max_witnesses) {
          PartitionSpec one(1, 2, {}, {1});
          witnesses.push_back(SuperIntervalMatrix::build(d, one, {a, b}));
        }
      }
    }
  }

  if (counterexamples > 0) {
    report.add("superadditivity", Verdict::Fails, witnesses,
               std::to_string(counterexamples) +
                   " endpoint pair(s) violate the inequality; each 1x2 witness holds (a, b)");
  } else {
    report.add("superadditivity",
               exhaustive ? Verdict::HoldsExhaustive : Verdict::HoldsSampled);
  }
  report.carrier_size = BigInt(pool.size());
  return report;
}

}  // namespace simat
