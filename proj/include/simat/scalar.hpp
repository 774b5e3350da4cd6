#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

#include "simat/error.hpp"

namespace simat {

using BigInt = boost::multiprecision::cpp_int;

enum class DomainKind : std::uint8_t {
  Residues,         // Z_n, n >= 2
  NonnegIntegers,   // Z+ u {0}
  NonnegRationals,  // Q+ u {0}  (stands in for R+ u {0}; entries are exact)
  UnitRationals,    // exact rationals in [0,1]
};

/// The coefficient world an endpoint lives in. Cheap value type; compared
/// structurally (kind + modulus).
class ScalarDomain {
 public:
  static ScalarDomain residues(std::uint64_t modulus);
  static ScalarDomain nat() { return ScalarDomain(DomainKind::NonnegIntegers, 0); }
  static ScalarDomain qplus() { return ScalarDomain(DomainKind::NonnegRationals, 0); }
  static ScalarDomain unit() { return ScalarDomain(DomainKind::UnitRationals, 0); }

  DomainKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_residues() const { return kind_ == DomainKind::Residues; }
  bool is_unit() const { return kind_ == DomainKind::UnitRationals; }
  /// Residues carry no order; everything else is ordered by the rational order.
  bool ordered() const { return kind_ != DomainKind::Residues; }

  /// File/CLI spelling: "z<n>", "nat", "qplus", "unit".
  std::string tag() const;
  static ScalarDomain parse_tag(std::string_view tag);

  friend bool operator==(const ScalarDomain& a, const ScalarDomain& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }
  friend bool operator!=(const ScalarDomain& a, const ScalarDomain& b) { return !(a == b); }

 private:
  ScalarDomain(DomainKind k, std::uint64_t m) : kind_(k), modulus_(m) {}
  DomainKind kind_;
  std::uint64_t modulus_;
};

/// An exact nonnegative rational. Always stored reduced with denominator >= 1.
/// Interpretation (reduction mod n, the [0,1] bound) comes from a ScalarDomain
/// passed to the operations below; the value itself is domain-free.
class Scalar {
 public:
  Scalar() : num_(0), den_(1) {}
  Scalar(int v) : Scalar(static_cast<long long>(v)) {}
  Scalar(long long v) : num_(v), den_(1) {
    if (v < 0) throw Error("negative scalar values are not representable");
  }
  Scalar(std::uint64_t v) : num_(v), den_(1) {}
  static Scalar integer(BigInt v);
  static Scalar fraction(BigInt num, BigInt den);
  /// Accepts "7", "3/2", and exact decimals like "0.31".
  static Scalar parse(std::string_view text);

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  /// True when the value is an integer fitting std::uint64_t (fast-path gate).
  bool fits_u64() const { return den_ == 1 && num_ >= 0 && num_ <= 0xFFFFFFFFFFFFFFFFull; }
  std::uint64_t as_u64() const { return num_.convert_to<std::uint64_t>(); }

  /// Canonical text: integer, or "p/q"; with decimals=true, a terminating
  /// decimal expansion when one exists (else falls back to "p/q").
  std::string str(bool decimals = false) const;

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

 private:
  BigInt num_, den_;
};

/// Membership of a value in a domain: reduced residue / nonneg / within [0,1].
bool valid_in(const ScalarDomain& d, const Scalar& x);

/// Sum in d. Residues reduce mod n; UnitRationals throw DomainOverflow past 1.
Scalar scalar_add(const ScalarDomain& d, const Scalar& x, const Scalar& y);
/// Product in d, reduced mod n for Residues.
Scalar scalar_mul(const ScalarDomain& d, const Scalar& x, const Scalar& y);
/// Lattice meet/join under the rational order; UnorderedDomain on Residues.
Scalar scalar_min(const ScalarDomain& d, const Scalar& x, const Scalar& y);
Scalar scalar_max(const ScalarDomain& d, const Scalar& x, const Scalar& y);
/// Residues only: the endpoint n - a (mod n). UnorderedDomain-free; other
/// domains have no additive inverses, so this throws DomainMismatch there.
Scalar scalar_additive_inverse(const ScalarDomain& d, const Scalar& x);

}  // namespace simat
