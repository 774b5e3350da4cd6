#include "simat/interval.hpp"

namespace simat {

namespace {

const ScalarDomain& common_domain(const Interval& x, const Interval& y) {
  if (x.domain() != y.domain())
    throw DomainMismatch("interval domains differ: " + x.domain().tag() + " vs " +
                         y.domain().tag());
  return x.domain();
}

}  // namespace

Interval ivl_add(const Interval& x, const Interval& y) {
  const ScalarDomain& d = common_domain(x, y);
  return Interval(scalar_add(d, x.upper(), y.upper()), d);
}

Interval ivl_mul(const Interval& x, const Interval& y) {
  const ScalarDomain& d = common_domain(x, y);
  return Interval(scalar_mul(d, x.upper(), y.upper()), d);
}

Interval ivl_min(const Interval& x, const Interval& y) {
  const ScalarDomain& d = common_domain(x, y);
  return Interval(scalar_min(d, x.upper(), y.upper()), d);
}

Interval ivl_max(const Interval& x, const Interval& y) {
  const ScalarDomain& d = common_domain(x, y);
  return Interval(scalar_max(d, x.upper(), y.upper()), d);
}

}  // namespace simat
