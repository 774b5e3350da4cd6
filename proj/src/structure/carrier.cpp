#include "simat/structure/carrier.hpp"

#include <algorithm>

namespace simat {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::string carrier_op_name(CarrierOp op) {
  switch (op) {
    case CarrierOp::Add:
      return "add";
    case CarrierOp::Hadamard:
      return "hadamard";
    case CarrierOp::Min:
      return "min";
    case CarrierOp::Max:
      return "max";
  }
  return "add";
}

CarrierOp parse_carrier_op(const std::string& name) {
  if (name == "add") return CarrierOp::Add;
  if (name == "hadamard" || name == "mul") return CarrierOp::Hadamard;
  if (name == "min") return CarrierOp::Min;
  if (name == "max") return CarrierOp::Max;
  throw Error("unknown carrier op '" + name + "'");
}

CarrierSpec CarrierSpec::constant_pattern(ScalarDomain d, PartitionSpec p, CarrierOp op) {
  CarrierSpec c;
  c.domain = d;
  c.partition = std::move(p);
  c.op = op;
  c.pattern = std::vector<int>(static_cast<std::size_t>(c.cells()), 0);
  return c;
}

void CarrierSpec::validate() const {
  if ((op == CarrierOp::Min || op == CarrierOp::Max) && !domain.ordered())
    throw Error("min/max carriers need an ordered domain, not " + domain.tag());
  if ((op == CarrierOp::Add || op == CarrierOp::Hadamard) && domain.is_unit())
    throw Error("unit-domain carriers compose via min/max only");
  if (entry_pool) {
    if (entry_pool->empty()) throw CarrierEmpty("entry pool is empty");
    for (const Scalar& s : *entry_pool)
      if (!valid_in(domain, s))
        throw DomainMismatch("pool value " + s.str() + " is not valid in " + domain.tag());
  }
  if (pattern) {
    if (static_cast<int>(pattern->size()) != cells())
      throw ShapeMismatch("pattern size must equal rows*cols");
    int k = classes();
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (int c : *pattern) {
      if (c < 0 || c >= k) throw Error("pattern classes must be 0..k-1 with no gaps");
      seen[static_cast<std::size_t>(c)] = true;
    }
    for (bool b : seen)
      if (!b) throw Error("pattern classes must be 0..k-1 with no gaps");
  }
}

int CarrierSpec::classes() const {
  if (!pattern) return cells();
  int mx = -1;
  for (int c : *pattern) mx = std::max(mx, c);
  return mx + 1;
}

std::vector<Scalar> CarrierSpec::effective_pool() const {
  if (entry_pool) return *entry_pool;
  if (domain.is_residues()) {
    std::vector<Scalar> pool;
    pool.reserve(domain.modulus());
    for (std::uint64_t v = 0; v < domain.modulus(); ++v) pool.emplace_back(v);
    return pool;
  }
  // Default sampling pools for the infinite domains.
  std::vector<Scalar> pool;
  switch (domain.kind()) {
    case DomainKind::NonnegIntegers:
      for (int v = 0; v <= 9; ++v) pool.emplace_back(v);
      break;
    case DomainKind::NonnegRationals:
      for (int v = 0; v <= 9; ++v) pool.emplace_back(v);
      for (int num = 1; num <= 9; ++num)
        for (int den = 2; den <= 4; ++den) {
          Scalar s = Scalar::fraction(num, den);
          if (!s.is_integer()) pool.push_back(s);
        }
      break;
    case DomainKind::UnitRationals:
      for (int num = 0; num <= 4; ++num) pool.push_back(Scalar::fraction(num, 4));
      for (int num = 1; num <= 9; num += 2) pool.push_back(Scalar::fraction(num, 10));
      break;
    case DomainKind::Residues:
      break;  // handled above
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

bool CarrierSpec::pool_is_universe() const {
  if (domain.is_residues()) return true;
  if (!entry_pool) return false;
  for (const Scalar& a : *entry_pool)
    for (const Scalar& b : *entry_pool) {
      Scalar r;
      try {
        switch (op) {
          case CarrierOp::Add:
            r = scalar_add(domain, a, b);
            break;
          case CarrierOp::Hadamard:
            r = scalar_mul(domain, a, b);
            break;
          case CarrierOp::Min:
            r = scalar_min(domain, a, b);
            break;
          case CarrierOp::Max:
            r = scalar_max(domain, a, b);
            break;
        }
      } catch (const Error&) {
        return false;
      }
      if (std::find(entry_pool->begin(), entry_pool->end(), r) == entry_pool->end())
        return false;
    }
  return true;
}

std::optional<BigInt> CarrierSpec::cardinality() const {
  if (!pool_is_universe()) return std::nullopt;
  BigInt pool_size = entry_pool ? BigInt(entry_pool->size()) : BigInt(domain.modulus());
  BigInt total = 1;
  for (int i = 0; i < classes(); ++i) total *= pool_size;
  return total;
}

SuperIntervalMatrix CarrierSpec::expand(const std::vector<Scalar>& class_values) const {
  if (static_cast<int>(class_values.size()) != classes())
    throw ShapeMismatch("expected one value per pattern class");
  std::vector<Scalar> grid;
  grid.reserve(static_cast<std::size_t>(cells()));
  for (int c = 0; c < cells(); ++c) {
    int cls = pattern ? (*pattern)[static_cast<std::size_t>(c)] : c;
    grid.push_back(class_values[static_cast<std::size_t>(cls)]);
  }
  return SuperIntervalMatrix::build(domain, partition, std::move(grid));
}

bool CarrierSpec::contains(const SuperIntervalMatrix& x) const {
  if (x.domain() != domain || !same_type(x.partition(), partition)) return false;
  if (pattern) {
    for (int c = 0; c < cells(); ++c) {
      int cls = (*pattern)[static_cast<std::size_t>(c)];
      // Every cell must agree with the first cell of its class.
      for (int c2 = 0; c2 < c; ++c2)
        if ((*pattern)[static_cast<std::size_t>(c2)] == cls) {
          if (x.endpoints()[static_cast<std::size_t>(c)] !=
              x.endpoints()[static_cast<std::size_t>(c2)])
            return false;
          break;
        }
    }
  }
  // Sampling pools over the infinite domains do not restrict membership.
  if (entry_pool && pool_is_universe()) {
    for (const Scalar& e : x.endpoints())
      if (std::find(entry_pool->begin(), entry_pool->end(), e) == entry_pool->end())
        return false;
  }
  return true;
}

std::string action_kind_name(ActionKind k) {
  switch (k) {
    case ActionKind::TypeI:
      return "type-I";
    case ActionKind::TypeII:
      return "type-II";
    case ActionKind::Set:
      return "set";
    case ActionKind::Semigroup:
      return "semigroup";
    case ActionKind::Group:
      return "group";
  }
  return "type-I";
}

ActionKind parse_action_kind(const std::string& name) {
  if (name == "type-I" || name == "type1" || name == "typeI") return ActionKind::TypeI;
  if (name == "type-II" || name == "type2" || name == "typeII") return ActionKind::TypeII;
  if (name == "set") return ActionKind::Set;
  if (name == "semigroup") return ActionKind::Semigroup;
  if (name == "group") return ActionKind::Group;
  throw Error("unknown action kind '" + name + "'");
}

void ScalarActionSpec::validate() const {
  if (scalar_set && scalar_set->empty()) throw Error("scalar set must be nonempty");
  if (kind == ActionKind::Group && !scalar_domain.is_residues())
    throw Error("group actions need Residues scalars (inverses)");
  if (scalar_set)
    for (const Scalar& s : *scalar_set)
      if (!valid_in(scalar_domain, s))
        throw DomainMismatch("scalar " + s.str() + " is not valid in " + scalar_domain.tag());
}

std::vector<Scalar> ScalarActionSpec::coefficients(int coeff_bound) const {
  if (scalar_set) return *scalar_set;
  std::vector<Scalar> out;
  if (scalar_domain.is_residues()) {
    for (std::uint64_t v = 0; v < scalar_domain.modulus(); ++v) out.emplace_back(v);
    return out;
  }
  for (int v = 0; v <= coeff_bound; ++v) out.emplace_back(v);
  if (scalar_domain.kind() == DomainKind::NonnegRationals ||
      scalar_domain.kind() == DomainKind::UnitRationals) {
    for (int num = 1; num <= coeff_bound; ++num)
      for (int den = 2; den <= coeff_bound; ++den) {
        Scalar s = Scalar::fraction(num, den);
        if (s.is_integer()) continue;
        if (scalar_domain.is_unit() && !valid_in(scalar_domain, s)) continue;
        out.push_back(s);
      }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 0xCBF29CE484222325ull ^ seed;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ull;
  }
  return h;
}

CarrierEnumerator::CarrierEnumerator(const CarrierSpec& spec)
    : spec_(spec), pool_(spec.effective_pool()), classes_(spec.classes()) {
  if (pool_.empty()) throw CarrierEmpty("carrier has no endpoint pool");
  std::sort(pool_.begin(), pool_.end());
}

std::optional<std::uint64_t> CarrierEnumerator::size_within(std::uint64_t limit) const {
  std::uint64_t total = 1;
  std::uint64_t p = pool_.size();
  for (int i = 0; i < classes_; ++i) {
    if (total > limit / p) return std::nullopt;
    total *= p;
  }
  if (total > limit) return std::nullopt;
  return total;
}

void CarrierEnumerator::first(std::vector<std::size_t>& idx) const {
  idx.assign(static_cast<std::size_t>(classes_), 0);
}

bool CarrierEnumerator::next(std::vector<std::size_t>& idx) const {
  for (std::size_t i = idx.size(); i-- > 0;) {
    if (++idx[i] < pool_.size()) return true;
    idx[i] = 0;
  }
  return false;
}

std::vector<Scalar> CarrierEnumerator::values(const std::vector<std::size_t>& idx) const {
  std::vector<Scalar> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(pool_[i]);
  return out;
}

SuperIntervalMatrix CarrierEnumerator::matrix(const std::vector<std::size_t>& idx) const {
  return spec_.expand(values(idx));
}

CarrierSampler::CarrierSampler(const CarrierSpec& spec, std::uint64_t seed)
    : spec_(spec), pool_(spec.effective_pool()), state_(seed ^ 0xA5A5A5A55A5A5A5Aull) {
  if (pool_.empty()) throw CarrierEmpty("carrier has no endpoint pool");
}

SuperIntervalMatrix CarrierSampler::next() {
  std::vector<Scalar> vals;
  int k = spec_.classes();
  vals.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    vals.push_back(pool_[static_cast<std::size_t>(splitmix64(state_) % pool_.size())]);
  return spec_.expand(vals);
}

}  // namespace simat
