#pragma once

#include <string>

#include "simat/scalar.hpp"

namespace simat {

/// The special interval [0,a]: only the upper endpoint is stored, the lower
/// endpoint 0 is implicit. Equality means equal endpoints in the same domain;
/// comparing across domains is an error, never a coercion.
class Interval {
 public:
  Interval(Scalar upper, ScalarDomain domain) : upper_(std::move(upper)), domain_(domain) {
    if (!valid_in(domain_, upper_))
      throw InvalidEndpoint("endpoint " + upper_.str() + " is not valid in " + domain_.tag());
  }
  static Interval zero(const ScalarDomain& d) { return Interval(Scalar(0), d); }
  static Interval one(const ScalarDomain& d) { return Interval(Scalar(1), d); }

  const Scalar& upper() const { return upper_; }
  const ScalarDomain& domain() const { return domain_; }
  bool is_zero() const { return upper_.is_zero(); }
  bool is_one() const { return upper_.is_one(); }

  /// Textual rendering "[0,a]".
  std::string str() const { return "[0," + upper_.str() + "]"; }

  friend bool operator==(const Interval& a, const Interval& b) {
    if (a.domain_ != b.domain_)
      throw DomainMismatch("cannot compare intervals across domains " + a.domain_.tag() +
                           " and " + b.domain_.tag());
    return a.upper_ == b.upper_;
  }
  friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

 private:
  Scalar upper_;
  ScalarDomain domain_;
};

Interval ivl_add(const Interval& x, const Interval& y);
Interval ivl_mul(const Interval& x, const Interval& y);
Interval ivl_min(const Interval& x, const Interval& y);
Interval ivl_max(const Interval& x, const Interval& y);

}  // namespace simat
