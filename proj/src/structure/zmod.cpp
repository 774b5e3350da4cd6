#include "simat/structure/zmod.hpp"

#include <numeric>

namespace simat::zmod {

namespace {

std::uint64_t umod(long long v, std::uint64_t n) {
  long long m = v % static_cast<long long>(n);
  if (m < 0) m += static_cast<long long>(n);
  return static_cast<std::uint64_t>(m);
}

// r1 <- c1*r1 + c2*r2 (mod n), elementwise.
std::vector<std::uint64_t> combine(const std::vector<std::uint64_t>& r1,
                                   const std::vector<std::uint64_t>& r2, std::uint64_t c1,
                                   std::uint64_t c2, std::uint64_t n) {
  std::vector<std::uint64_t> out(r1.size());
  for (std::size_t i = 0; i < r1.size(); ++i)
    out[i] = ((c1 * r1[i]) % n + (c2 * r2[i]) % n) % n;
  return out;
}

std::size_t leading(const std::vector<std::uint64_t>& r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != 0) return i;
  return r.size();
}

// Extended gcd on int64; returns g and Bezout coefficients.
long long ext_gcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

std::uint64_t lifting_unit(std::uint64_t a, std::uint64_t n) {
  a %= n;
  if (a == 0) return 1;
  std::uint64_t g = std::gcd(a, n);
  std::uint64_t ap = a / g, m = n / g;  // gcd(ap, m) == 1 by definition of g
  long long x, y;
  ext_gcd(static_cast<long long>(ap % m == 0 ? 1 : ap % m), static_cast<long long>(m), x, y);
  std::uint64_t u0 = m == 1 ? 1 : umod(x, m);
  if (u0 == 0) u0 = 1;
  // Lift u0 (a unit mod m) to a unit mod n with the same residue mod m.
  std::uint64_t u = u0;
  while (std::gcd(u, n) != 1) u += m;
  return u % n == 0 ? 1 : u % n;
}

Module::Module(std::uint64_t n, std::size_t width) : n_(n), width_(width) {
  if (n < 2) throw Error("modulus must be >= 2");
}

Module::Module(std::uint64_t n, std::size_t width,
               std::vector<std::vector<std::uint64_t>> generators)
    : n_(n), width_(width) {
  if (n < 2) throw Error("modulus must be >= 2");
  if (n > 0xFFFFFFFFull) throw Error("modulus must fit 32 bits");
  for (auto& g : generators) {
    if (g.size() != width) throw Error("generator width mismatch");
    for (auto& v : g) v %= n;
  }
  howellize(std::move(generators));
}

void Module::howellize(std::vector<std::vector<std::uint64_t>> gens) {
  std::vector<std::vector<std::uint64_t>> pool = std::move(gens);
  rows_.clear();
  pivot_col_.clear();

  for (std::size_t col = 0; col < width_; ++col) {
    // Gather pool rows whose leftmost nonzero entry is this column.
    std::vector<std::vector<std::uint64_t>> here;
    std::vector<std::vector<std::uint64_t>> rest;
    for (auto& r : pool) {
      std::size_t lead = leading(r);
      if (lead == col)
        here.push_back(std::move(r));
      else if (lead < width_)
        rest.push_back(std::move(r));
    }
    pool = std::move(rest);
    if (here.empty()) continue;

    // Fold all rows with this pivot column into one via gcd transforms; the
    // byproduct rows have their lead pushed right and rejoin the pool.
    std::vector<std::uint64_t> pivot = std::move(here.front());
    for (std::size_t i = 1; i < here.size(); ++i) {
      std::vector<std::uint64_t>& other = here[i];
      long long p, q;
      long long a = static_cast<long long>(pivot[col]);
      long long b = static_cast<long long>(other[col]);
      long long g = ext_gcd(a, b, p, q);
      std::uint64_t pu = umod(p, n_), qu = umod(q, n_);
      std::vector<std::uint64_t> merged = combine(pivot, other, pu, qu, n_);
      std::vector<std::uint64_t> leftover =
          combine(pivot, other, umod(b / g, n_), umod(-(a / g), n_), n_);
      pivot = std::move(merged);
      if (leading(leftover) < width_) pool.push_back(std::move(leftover));
    }

    // Normalize the leading entry to gcd(entry, n) by a unit multiple.
    std::uint64_t u = lifting_unit(pivot[col], n_);
    for (auto& v : pivot) v = (v * u) % n_;
    std::uint64_t g = pivot[col];

    // Annihilator row: (n/g) * pivot kills the leading entry but can be a
    // nonzero member the echelon rows alone would miss.
    if (g != 0) {
      std::uint64_t mult = n_ / std::gcd(g, n_);
      if (mult > 1) {
        std::vector<std::uint64_t> ann(width_);
        for (std::size_t i = 0; i < width_; ++i) ann[i] = (pivot[i] * mult) % n_;
        if (leading(ann) < width_) pool.push_back(std::move(ann));
      }
    }

    rows_.push_back(std::move(pivot));
    pivot_col_.push_back(col);
  }

  // Back-reduce entries above each pivot into [0, g).
  for (std::size_t i = rows_.size(); i-- > 0;) {
    std::size_t col = pivot_col_[i];
    std::uint64_t g = rows_[i][col];
    for (std::size_t j = 0; j < i; ++j) {
      std::uint64_t v = rows_[j][col];
      if (v == 0) continue;
      std::uint64_t k = v / g;
      if (k == 0) continue;
      std::uint64_t c = n_ - (k % n_);
      for (std::size_t t = 0; t < width_; ++t)
        rows_[j][t] = (rows_[j][t] + c * rows_[i][t]) % n_;
    }
  }
}

std::vector<std::uint64_t> Module::reduce(std::vector<std::uint64_t> v) const {
  if (v.size() != width_) throw Error("vector width mismatch");
  for (auto& x : v) x %= n_;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::size_t col = pivot_col_[i];
    std::uint64_t x = v[col];
    if (x == 0) continue;
    std::uint64_t g = rows_[i][col];
    if (x % g != 0) continue;  // cannot eliminate; v is not a member
    std::uint64_t k = x / g;
    std::uint64_t c = n_ - (k % n_);
    for (std::size_t t = 0; t < width_; ++t) v[t] = (v[t] + c * rows_[i][t]) % n_;
  }
  return v;
}

bool Module::contains(const std::vector<std::uint64_t>& v) const {
  std::vector<std::uint64_t> r = reduce(v);
  for (std::uint64_t x : r)
    if (x != 0) return false;
  return true;
}

BigInt Module::size() const {
  BigInt total = 1;
  for (std::size_t i = 0; i < rows_.size(); ++i) total *= n_ / rows_[i][pivot_col_[i]];
  return total;
}

}  // namespace simat::zmod
