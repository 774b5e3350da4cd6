#include "simat/structure/linear_map.hpp"

#include <algorithm>
#include <cmath>

namespace simat {

StructureReport check_linear_map(const LinearMapFn& map, const CarrierSpec& src,
                                 const CarrierSpec& dst, const ScalarActionSpec& action,
                                 const Budget& budget) {
  src.validate();
  dst.validate();
  action.validate();
  StructureReport rep;
  rep.subject = "linear map";
  rep.seed = budget.seed;
  rep.sample_count = budget.sample_count;
  rep.carrier_size = src.cardinality();

  std::vector<Scalar> alphas = action.coefficients(budget.coeff_bound);
  std::sort(alphas.begin(), alphas.end());

  CarrierEnumerator en(src);
  std::uint64_t pair_budget = budget.exhaustive_limit / std::max<std::size_t>(alphas.size(), 1);
  auto finite = en.size_within(
      static_cast<std::uint64_t>(std::sqrt(static_cast<double>(pair_budget)) + 1));
  bool exhaustive = src.pool_is_universe() && finite.has_value();

  auto record_codomain = [&](const SuperIntervalMatrix& image,
                             const SuperIntervalMatrix& preimage) {
    if (image.domain() != dst.domain || !same_type(image.partition(), dst.partition)) {
      rep.add("codomain", Verdict::Fails, {preimage},
              "image of the witness is not a dst-carrier element");
      return false;
    }
    return true;
  };

  auto linear_at = [&](const Scalar& alpha, const SuperIntervalMatrix& v,
                       const SuperIntervalMatrix& u) {
    SuperIntervalMatrix lhs = map(add(scalar_mul(alpha, v), u));
    SuperIntervalMatrix rhs = add(scalar_mul(alpha, map(v)), map(u));
    return lhs == rhs;
  };

  if (exhaustive) {
    std::vector<SuperIntervalMatrix> elems;
    std::vector<std::size_t> idx;
    en.first(idx);
    do {
      elems.push_back(en.matrix(idx));
    } while (en.next(idx));
    for (const auto& v : elems)
      if (!record_codomain(map(v), v)) return rep;
    rep.add("codomain", Verdict::HoldsExhaustive);
    for (const Scalar& alpha : alphas)
      for (const auto& v : elems)
        for (const auto& u : elems)
          if (!linear_at(alpha, v, u)) {
            PartitionSpec one(1, 1);
            rep.add("linearity", Verdict::Fails,
                    {SuperIntervalMatrix::build(action.scalar_domain, one, {alpha}), v, u},
                    "T(alpha v + u) != alpha T(v) + T(u)");
            return rep;
          }
    rep.add("linearity", Verdict::HoldsExhaustive);
    return rep;
  }

  CarrierSampler sampler(src, mix_seed(budget.seed, "linear-map"));
  std::uint64_t alpha_state = mix_seed(budget.seed, "linear-map-alpha");
  for (int i = 0; i < budget.sample_count; ++i) {
    SuperIntervalMatrix v = sampler.next(), u = sampler.next();
    const Scalar& alpha = alphas[splitmix64(alpha_state) % alphas.size()];
    if (!record_codomain(map(v), v)) return rep;
    if (!linear_at(alpha, v, u)) {
      PartitionSpec one(1, 1);
      rep.add("linearity", Verdict::Fails,
              {SuperIntervalMatrix::build(action.scalar_domain, one, {alpha}), v, u},
              "T(alpha v + u) != alpha T(v) + T(u)");
      return rep;
    }
  }
  rep.add("codomain", Verdict::HoldsSampled);
  rep.add("linearity", Verdict::HoldsSampled);
  return rep;
}

}  // namespace simat
