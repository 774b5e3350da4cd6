#pragma once

#include <functional>

#include "simat/structure/carrier.hpp"

namespace simat {

/// A total map on the source carrier. Throw MapUndefined from the callable
/// when an element has no image (table-backed maps do this on misses).
using LinearMapFn = std::function<SuperIntervalMatrix(const SuperIntervalMatrix&)>;

/// Linearity audit: T(alpha*v + u) == alpha*T(v) + T(u) over sampled or
/// enumerated (alpha, v, u) triples, plus a codomain check T(v) in dst.
/// A Fails verdict carries the violating (alpha-grid placeholder, v, u).
StructureReport check_linear_map(const LinearMapFn& map, const CarrierSpec& src,
                                 const CarrierSpec& dst, const ScalarActionSpec& action,
                                 const Budget& budget);

}  // namespace simat
