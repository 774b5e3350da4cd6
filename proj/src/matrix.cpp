#include "simat/matrix.hpp"

namespace simat {

namespace {

std::string cut_set(const std::vector<int>& cuts) {
  std::string s = "{";
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cuts[i]);
  }
  return s + "}";
}

void require_same_type(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b) {
  if (a.domain() != b.domain())
    throw DomainMismatch("matrix domains differ: " + a.domain().tag() + " vs " +
                         b.domain().tag());
  const PartitionSpec& p = a.partition();
  const PartitionSpec& q = b.partition();
  if (p.rows != q.rows || p.cols != q.cols)
    throw TypeMismatch("matrix dimensions differ: " + std::to_string(p.rows) + "x" +
                       std::to_string(p.cols) + " vs " + std::to_string(q.rows) + "x" +
                       std::to_string(q.cols));
  if (p.row_cuts != q.row_cuts)
    throw TypeMismatch("row cut sets differ (" + cut_set(p.row_cuts) + " vs " +
                       cut_set(q.row_cuts) + "); not of same type");
  if (p.col_cuts != q.col_cuts)
    throw TypeMismatch("column cut sets differ (" + cut_set(p.col_cuts) + " vs " +
                       cut_set(q.col_cuts) + "); not of same type");
}

}  // namespace

MatrixShapeKind shape_kind(const PartitionSpec& p) {
  if (p.rows == 1) return MatrixShapeKind::RowMatrix;
  if (p.cols == 1) return MatrixShapeKind::ColumnMatrix;
  if (!p.col_cuts.empty() && p.row_cuts.empty()) return MatrixShapeKind::RowVector;
  if (!p.row_cuts.empty() && p.col_cuts.empty()) return MatrixShapeKind::ColumnVector;
  return MatrixShapeKind::General;
}

std::string shape_kind_name(MatrixShapeKind k) {
  switch (k) {
    case MatrixShapeKind::RowMatrix:
      return "row-matrix";
    case MatrixShapeKind::ColumnMatrix:
      return "column-matrix";
    case MatrixShapeKind::RowVector:
      return "row-vector";
    case MatrixShapeKind::ColumnVector:
      return "column-vector";
    case MatrixShapeKind::General:
      return "general";
  }
  return "general";
}

SuperIntervalMatrix SuperIntervalMatrix::build(ScalarDomain domain, PartitionSpec partition,
                                               std::vector<Scalar> endpoints) {
  std::size_t want = static_cast<std::size_t>(partition.rows) *
                     static_cast<std::size_t>(partition.cols);
  if (endpoints.size() != want)
    throw ShapeMismatch("endpoint grid has " + std::to_string(endpoints.size()) +
                        " entries, partition needs " + std::to_string(want));
  for (const Scalar& e : endpoints)
    if (!valid_in(domain, e))
      throw InvalidEndpoint("endpoint " + e.str() + " is not valid in " + domain.tag());
  return SuperIntervalMatrix(domain, std::move(partition), std::move(endpoints));
}

SuperIntervalMatrix SuperIntervalMatrix::zero(const ScalarDomain& d, const PartitionSpec& p) {
  std::vector<Scalar> e(static_cast<std::size_t>(p.rows) * static_cast<std::size_t>(p.cols),
                        Scalar(0));
  return build(d, p, std::move(e));
}

SuperIntervalMatrix SuperIntervalMatrix::ones(const ScalarDomain& d, const PartitionSpec& p) {
  std::vector<Scalar> e(static_cast<std::size_t>(p.rows) * static_cast<std::size_t>(p.cols),
                        Scalar(1));
  return build(d, p, std::move(e));
}

bool SuperIntervalMatrix::is_zero() const {
  for (const Scalar& e : endpoints_)
    if (!e.is_zero()) return false;
  return true;
}

SuperIntervalMatrix add(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b) {
  require_same_type(a, b);
  if (a.domain().is_unit())
    throw DomainMismatch("unit-domain matrices never add; compose fuzzy matrices via min/max");
  std::vector<Scalar> out;
  out.reserve(a.endpoints().size());
  for (std::size_t k = 0; k < a.endpoints().size(); ++k)
    out.push_back(scalar_add(a.domain(), a.endpoints()[k], b.endpoints()[k]));
  return SuperIntervalMatrix::build(a.domain(), a.partition(), std::move(out));
}

SuperIntervalMatrix hadamard(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b) {
  require_same_type(a, b);
  if (a.domain().is_unit())
    throw DomainMismatch("unit-domain matrices compose via min/max, not hadamard");
  std::vector<Scalar> out;
  out.reserve(a.endpoints().size());
  for (std::size_t k = 0; k < a.endpoints().size(); ++k)
    out.push_back(scalar_mul(a.domain(), a.endpoints()[k], b.endpoints()[k]));
  return SuperIntervalMatrix::build(a.domain(), a.partition(), std::move(out));
}

SuperIntervalMatrix scalar_mul(const Scalar& s, const SuperIntervalMatrix& a, ScalarForm) {
  if (!valid_in(a.domain(), s))
    throw DomainMismatch("scalar " + s.str() + " is not a value of domain " + a.domain().tag());
  std::vector<Scalar> out;
  out.reserve(a.endpoints().size());
  for (const Scalar& e : a.endpoints()) out.push_back(scalar_mul(a.domain(), s, e));
  return SuperIntervalMatrix::build(a.domain(), a.partition(), std::move(out));
}

SuperIntervalMatrix transpose(const SuperIntervalMatrix& a) {
  std::vector<Scalar> out;
  out.reserve(a.endpoints().size());
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i) out.push_back(a.endpoint(i, j));
  return SuperIntervalMatrix::build(a.domain(), transpose_partition(a.partition()),
                                    std::move(out));
}

}  // namespace simat
