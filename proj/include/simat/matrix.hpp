#pragma once

#include <string>
#include <vector>

#include "simat/interval.hpp"
#include "simat/partition.hpp"

namespace simat {

/// Classification of a partitioned matrix, a pure function of the partition.
enum class MatrixShapeKind {
  RowMatrix,     // m = 1 (column cuts only, by construction)
  ColumnMatrix,  // n = 1
  RowVector,     // m > 1, column cuts only (at least one)
  ColumnVector,  // n > 1, row cuts only (at least one)
  General,
};

MatrixShapeKind shape_kind(const PartitionSpec& p);
std::string shape_kind_name(MatrixShapeKind k);

/// An interval grid plus a partition plus a domain tag. Immutable value;
/// every operation returns a fresh matrix.
class SuperIntervalMatrix {
 public:
  /// Validates endpoints against the domain (InvalidEndpoint) and the grid
  /// size against the partition (ShapeMismatch). Endpoints row-major.
  static SuperIntervalMatrix build(ScalarDomain domain, PartitionSpec partition,
                                   std::vector<Scalar> endpoints);
  static SuperIntervalMatrix zero(const ScalarDomain& d, const PartitionSpec& p);
  static SuperIntervalMatrix ones(const ScalarDomain& d, const PartitionSpec& p);

  const ScalarDomain& domain() const { return domain_; }
  const PartitionSpec& partition() const { return partition_; }
  int rows() const { return partition_.rows; }
  int cols() const { return partition_.cols; }
  MatrixShapeKind kind() const { return shape_kind(partition_); }

  const Scalar& endpoint(int i, int j) const {
    return endpoints_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols()) +
                      static_cast<std::size_t>(j)];
  }
  Interval at(int i, int j) const { return Interval(endpoint(i, j), domain_); }
  const std::vector<Scalar>& endpoints() const { return endpoints_; }
  bool is_zero() const;

  friend bool operator==(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b) {
    return a.domain_ == b.domain_ && a.partition_ == b.partition_ &&
           a.endpoints_ == b.endpoints_;
  }
  friend bool operator!=(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b) {
    return !(a == b);
  }

 private:
  SuperIntervalMatrix(ScalarDomain d, PartitionSpec p, std::vector<Scalar> e)
      : domain_(d), partition_(std::move(p)), endpoints_(std::move(e)) {}
  ScalarDomain domain_;
  PartitionSpec partition_;
  std::vector<Scalar> endpoints_;
};

/// Entrywise sum; requires equal domains (DomainMismatch) and same type
/// (TypeMismatch). Unit-domain matrices never add (fuzzy composition is
/// min/max), also DomainMismatch.
SuperIntervalMatrix add(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b);

/// Entrywise interval product (the paper's componentwise "new multiplication").
SuperIntervalMatrix hadamard(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b);

/// Whether the acting scalar arrived as a bare s (type I) or as an interval
/// [0,s] (type II). Both scale endpoints identically; the flag only records
/// the taxonomy for reports.
enum class ScalarForm { Base, IntervalForm };

SuperIntervalMatrix scalar_mul(const Scalar& s, const SuperIntervalMatrix& a,
                               ScalarForm form = ScalarForm::Base);

/// Entry grid and partition both transposed; block (i,j) of the result is the
/// transpose of block (j,i) of the input.
SuperIntervalMatrix transpose(const SuperIntervalMatrix& a);

}  // namespace simat
