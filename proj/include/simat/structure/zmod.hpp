#pragma once

#include <cstdint>
#include <vector>

#include "simat/scalar.hpp"

namespace simat::zmod {

/// A finitely generated submodule of Z_n^width, held in Howell normal form.
/// Howell form is a canonical echelon form valid over Z_n (a principal ideal
/// ring), closed under the annihilator rows that plain echelon misses; it
/// supports exact membership tests without enumeration.
class Module {
 public:
  Module(std::uint64_t n, std::size_t width);
  Module(std::uint64_t n, std::size_t width, std::vector<std::vector<std::uint64_t>> generators);

  std::uint64_t modulus() const { return n_; }
  std::size_t width() const { return width_; }
  const std::vector<std::vector<std::uint64_t>>& rows() const { return rows_; }

  bool contains(const std::vector<std::uint64_t>& v) const;
  /// v minus its best elimination against the pivot rows; zero iff member.
  std::vector<std::uint64_t> reduce(std::vector<std::uint64_t> v) const;
  /// Number of elements of the module.
  BigInt size() const;
  bool is_zero() const { return rows_.empty(); }

 private:
  void howellize(std::vector<std::vector<std::uint64_t>> gens);
  std::uint64_t n_;
  std::size_t width_;
  std::vector<std::vector<std::uint64_t>> rows_;  // Howell form, pivots left to right
  std::vector<std::size_t> pivot_col_;
};

/// u with gcd(u, n) = 1 and u * a == gcd(a, n) (mod n).
std::uint64_t lifting_unit(std::uint64_t a, std::uint64_t n);

}  // namespace simat::zmod
