#pragma once

#include "simat/matrix.hpp"
#include "simat/structure/carrier.hpp"
#include "simat/structure/report.hpp"

namespace simat {

/// Entrywise min/max of two unit-domain matrices of the same type. This is
/// the only composition fuzzy matrices support (they never add).
SuperIntervalMatrix fuzzy_min(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b);
SuperIntervalMatrix fuzzy_max(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b);

/// The three scalar products on fuzzy matrices: entrywise min, max, or
/// product of b in [0,1] with each endpoint.
SuperIntervalMatrix fuzzy_scalar_min(const Scalar& b, const SuperIntervalMatrix& a);
SuperIntervalMatrix fuzzy_scalar_max(const Scalar& b, const SuperIntervalMatrix& a);
SuperIntervalMatrix fuzzy_scalar_prod(const Scalar& b, const SuperIntervalMatrix& a);

/// Endpoint-wise fuzzification rule into [0,1].
///
/// reciprocal: a -> 1/a for a != 0 (as a rational value, never inverted mod
/// n), 0 -> eta_zero. The two paper passages disagree on eta(0) (1 on matrix
/// endpoints, 0 on set scalars), so it is a parameter rather than a constant.
/// constant-by-class: positive integers -> class_int, non-integers ->
/// class_frac, 0 -> eta_zero.
struct EtaMap {
  enum class Rule { Reciprocal, ConstantByClass };
  Rule rule = Rule::Reciprocal;
  Scalar eta_zero = Scalar(1);
  Scalar class_int = Scalar::fraction(1, 3);
  Scalar class_frac = Scalar::fraction(1, 4);

  /// Image of one endpoint; ImageEscape when the result leaves [0,1].
  Scalar apply(const Scalar& a) const;
};

/// Same shape and partition, endpoint a -> eta(a). The source matrix lives in
/// any non-unit domain.
SuperIntervalMatrix fuzzify(const SuperIntervalMatrix& a, const EtaMap& eta);

/// Checks eta(a+b) >= min(eta(a), eta(b)) over endpoint pairs of the carrier
/// domain (exhaustive over Residues, bounded over nat). Counterexample pairs
/// are reported in lexicographic order; the verdict is Fails if any exist.
StructureReport audit_eta(const EtaMap& eta, const CarrierSpec& carrier, const Budget& budget);

}  // namespace simat
