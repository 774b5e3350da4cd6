#include "simat/scalar.hpp"

#include <boost/integer/common_factor_rt.hpp>

namespace simat {

namespace {

BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

[[noreturn]] void bad_value(const ScalarDomain& d, const Scalar& x) {
  throw DomainMismatch("scalar " + x.str() + " is not a value of domain " + d.tag());
}

void require_valid(const ScalarDomain& d, const Scalar& x, const Scalar& y) {
  if (!valid_in(d, x)) bad_value(d, x);
  if (!valid_in(d, y)) bad_value(d, y);
}

}  // namespace

ScalarDomain ScalarDomain::residues(std::uint64_t modulus) {
  if (modulus < 2) throw Error("Residues modulus must be >= 2");
  if (modulus > 0xFFFFFFFFull) throw Error("Residues modulus must fit 32 bits");
  return ScalarDomain(DomainKind::Residues, modulus);
}

std::string ScalarDomain::tag() const {
  switch (kind_) {
    case DomainKind::Residues:
      return "z" + std::to_string(modulus_);
    case DomainKind::NonnegIntegers:
      return "nat";
    case DomainKind::NonnegRationals:
      return "qplus";
    case DomainKind::UnitRationals:
      return "unit";
  }
  throw Error("unreachable domain kind");
}

ScalarDomain ScalarDomain::parse_tag(std::string_view tag) {
  if (tag == "nat") return nat();
  if (tag == "qplus") return qplus();
  if (tag == "unit") return unit();
  if (tag.size() >= 2 && tag[0] == 'z') {
    std::uint64_t n = 0;
    for (char c : tag.substr(1)) {
      if (c < '0' || c > '9') throw Error("unknown domain tag '" + std::string(tag) + "'");
      n = n * 10 + static_cast<std::uint64_t>(c - '0');
      if (n > 0xFFFFFFFFull) throw Error("modulus out of range in tag '" + std::string(tag) + "'");
    }
    return residues(n);
  }
  throw Error("unknown domain tag '" + std::string(tag) + "'");
}

Scalar Scalar::integer(BigInt v) {
  if (v < 0) throw Error("negative scalar values are not representable");
  Scalar s;
  s.num_ = std::move(v);
  s.den_ = 1;
  return s;
}

Scalar Scalar::fraction(BigInt num, BigInt den) {
  if (den == 0) throw Error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0) throw Error("negative scalar values are not representable");
  BigInt g = big_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  Scalar s;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  return s;
}

Scalar Scalar::parse(std::string_view text) {
  if (text.empty()) throw Error("empty scalar literal");
  auto digits_to_big = [](std::string_view sv) {
    if (sv.empty()) throw Error("malformed scalar literal");
    BigInt v = 0;
    for (char c : sv) {
      if (c < '0' || c > '9') throw Error("malformed scalar literal '" + std::string(sv) + "'");
      v = v * 10 + (c - '0');
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    return fraction(digits_to_big(text.substr(0, slash)), digits_to_big(text.substr(slash + 1)));
  }
  auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    // Decimal literals parse to exact rationals: 0.31 -> 31/100.
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) throw Error("malformed decimal literal '" + std::string(text) + "'");
    BigInt den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    BigInt num = (whole.empty() ? BigInt(0) : digits_to_big(whole)) * den + digits_to_big(frac);
    return fraction(std::move(num), std::move(den));
  }
  return integer(digits_to_big(text));
}

std::string Scalar::str(bool decimals) const {
  if (den_ == 1) return num_.str();
  if (decimals) {
    // Terminating expansion exists iff den = 2^a * 5^b.
    BigInt d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) {
      d /= 2;
      ++twos;
    }
    while (d % 5 == 0) {
      d /= 5;
      ++fives;
    }
    if (d == 1) {
      int digits = std::max(twos, fives);
      BigInt scale = 1;
      for (int i = 0; i < digits; ++i) scale *= 10;
      BigInt scaled = num_ * scale / den_;
      std::string s = scaled.str();
      while (static_cast<int>(s.size()) <= digits) s.insert(s.begin(), '0');
      s.insert(s.size() - static_cast<std::size_t>(digits), ".");
      return s;
    }
  }
  return num_.str() + "/" + den_.str();
}

bool valid_in(const ScalarDomain& d, const Scalar& x) {
  switch (d.kind()) {
    case DomainKind::Residues:
      return x.is_integer() && x.numerator() < d.modulus();
    case DomainKind::NonnegIntegers:
      return x.is_integer();
    case DomainKind::NonnegRationals:
      return true;
    case DomainKind::UnitRationals:
      return x.numerator() <= x.denominator();
  }
  return false;
}

Scalar scalar_add(const ScalarDomain& d, const Scalar& x, const Scalar& y) {
  require_valid(d, x, y);
  switch (d.kind()) {
    case DomainKind::Residues: {
      // Values are reduced, so the sum fits uint64 for any 32-bit modulus.
      std::uint64_t r = x.as_u64() + y.as_u64();
      std::uint64_t n = d.modulus();
      if (r >= n) r -= n;
      return Scalar(r);
    }
    case DomainKind::NonnegIntegers:
      return Scalar::integer(x.numerator() + y.numerator());
    case DomainKind::NonnegRationals:
    case DomainKind::UnitRationals: {
      Scalar s = Scalar::fraction(
          x.numerator() * y.denominator() + y.numerator() * x.denominator(),
          x.denominator() * y.denominator());
      if (d.is_unit() && !valid_in(d, s))
        throw DomainOverflow("unit-domain sum " + s.str() + " leaves [0,1]");
      return s;
    }
  }
  throw Error("unreachable domain kind");
}

Scalar scalar_mul(const ScalarDomain& d, const Scalar& x, const Scalar& y) {
  require_valid(d, x, y);
  switch (d.kind()) {
    case DomainKind::Residues: {
      std::uint64_t r = (x.as_u64() * y.as_u64()) % d.modulus();
      return Scalar(r);
    }
    case DomainKind::NonnegIntegers:
      return Scalar::integer(x.numerator() * y.numerator());
    case DomainKind::NonnegRationals:
    case DomainKind::UnitRationals:
      // A product of values in [0,1] stays in [0,1]; no overflow check needed.
      return Scalar::fraction(x.numerator() * y.numerator(),
                              x.denominator() * y.denominator());
  }
  throw Error("unreachable domain kind");
}

Scalar scalar_min(const ScalarDomain& d, const Scalar& x, const Scalar& y) {
  if (!d.ordered()) throw UnorderedDomain("min is undefined on " + d.tag());
  require_valid(d, x, y);
  return x <= y ? x : y;
}

Scalar scalar_max(const ScalarDomain& d, const Scalar& x, const Scalar& y) {
  if (!d.ordered()) throw UnorderedDomain("max is undefined on " + d.tag());
  require_valid(d, x, y);
  return x >= y ? x : y;
}

Scalar scalar_additive_inverse(const ScalarDomain& d, const Scalar& x) {
  if (!d.is_residues())
    throw DomainMismatch("additive inverses exist only over Residues, not " + d.tag());
  if (!valid_in(d, x)) bad_value(d, x);
  std::uint64_t v = x.as_u64();
  return Scalar(v == 0 ? 0 : d.modulus() - v);
}

}  // namespace simat
