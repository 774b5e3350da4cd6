#include "simat/block_ops.hpp"

namespace simat {

namespace {

void require_product_domain(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b) {
  if (a.domain() != b.domain())
    throw DomainMismatch("matrix domains differ: " + a.domain().tag() + " vs " +
                         b.domain().tag());
  if (a.domain().is_unit())
    throw DomainMismatch("matrix products are undefined over the unit (fuzzy) domain");
}

std::string cuts_str(const std::vector<int>& cuts) {
  std::string s = "{";
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cuts[i]);
  }
  return s + "}";
}

// Unboxed residue grids: endpoints of a validated matrix are reduced, so the
// products run directly on uint64 values (n fits 32 bits, so every product
// fits 64). Results are identical to the generic Scalar path.
std::vector<std::uint64_t> unboxed(const SuperIntervalMatrix& m) {
  std::vector<std::uint64_t> out;
  out.reserve(m.endpoints().size());
  for (const Scalar& e : m.endpoints()) out.push_back(e.as_u64());
  return out;
}

std::vector<Scalar> boxed(const std::vector<std::uint64_t>& v) {
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (std::uint64_t x : v) out.emplace_back(x);
  return out;
}

}  // namespace

ConformabilityReport conformability(const SuperIntervalMatrix& a,
                                    const SuperIntervalMatrix& b) {
  ConformabilityReport r;
  r.flat_ok = a.cols() == b.rows();
  if (!r.flat_ok) {
    r.detail = "flat dimensions do not chain: " + std::to_string(a.cols()) + " columns vs " +
               std::to_string(b.rows()) + " rows";
    return r;
  }
  r.block_ok = a.partition().col_cuts == b.partition().row_cuts;
  r.detail = r.block_ok ? "conformable"
                        : "column cuts " + cuts_str(a.partition().col_cuts) +
                              " do not match row cuts " + cuts_str(b.partition().row_cuts);
  return r;
}

SuperIntervalMatrix major_product(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b) {
  require_product_domain(a, b);
  ConformabilityReport conf = conformability(a, b);
  if (!conf.flat_ok) throw NotConformable(conf.detail);
  if (!conf.block_ok) throw PartitionMismatch(conf.detail);

  const ScalarDomain& d = a.domain();
  int m = a.rows(), n = b.cols();

  // Shared interior ranges: col blocks of A == row blocks of B.
  std::vector<IndexRange> row_ranges = block_ranges(a.partition().row_cuts, m);
  std::vector<IndexRange> mid_ranges = block_ranges(b.partition().row_cuts, b.rows());
  std::vector<IndexRange> col_ranges = block_ranges(b.partition().col_cuts, n);
  PartitionSpec result(m, n, a.partition().row_cuts, b.partition().col_cuts);

  if (d.is_residues()) {
    std::uint64_t mod = d.modulus();
    std::vector<std::uint64_t> av = unboxed(a), bv = unboxed(b);
    std::vector<std::uint64_t> acc(static_cast<std::size_t>(m) * static_cast<std::size_t>(n),
                                   0);
    int inner = a.cols();
    for (const IndexRange& mr : mid_ranges)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
          std::uint64_t partial = 0;
          for (int k = mr.begin; k < mr.end; ++k)
            partial = (partial + av[static_cast<std::size_t>(i * inner + k)] *
                                     bv[static_cast<std::size_t>(k * n + j)] % mod) %
                      mod;
          std::size_t idx = static_cast<std::size_t>(i * n + j);
          acc[idx] = (acc[idx] + partial) % mod;
        }
    return SuperIntervalMatrix::build(d, std::move(result), boxed(acc));
  }

  std::vector<Scalar> out(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (const IndexRange& rr : row_ranges)
    for (const IndexRange& cr : col_ranges) {
      // Block (rr, cr) = sum over interior blocks, left to right.
      bool first = true;
      for (const IndexRange& mr : mid_ranges) {
        for (int i = rr.begin; i < rr.end; ++i)
          for (int j = cr.begin; j < cr.end; ++j) {
            Scalar acc(0);
            bool any = false;
            for (int k = mr.begin; k < mr.end; ++k) {
              Scalar term = scalar_mul(d, a.endpoint(i, k), b.endpoint(k, j));
              acc = any ? scalar_add(d, acc, term) : std::move(term);
              any = true;
            }
            std::size_t idx = static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(j);
            out[idx] = first ? std::move(acc) : scalar_add(d, out[idx], acc);
          }
        first = false;
      }
    }
  return SuperIntervalMatrix::build(d, std::move(result), std::move(out));
}

SuperIntervalMatrix outer_product(const SuperIntervalMatrix& col,
                                  const SuperIntervalMatrix& row) {
  if (col.cols() != 1)
    throw ShapeMismatch("outer product expects an n x 1 column, got " +
                        std::to_string(col.rows()) + "x" + std::to_string(col.cols()));
  if (row.rows() != 1)
    throw ShapeMismatch("outer product expects a 1 x m row, got " +
                        std::to_string(row.rows()) + "x" + std::to_string(row.cols()));
  require_product_domain(col, row);
  const ScalarDomain& d = col.domain();
  int m = col.rows(), n = row.cols();
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      out.push_back(scalar_mul(d, col.endpoint(i, 0), row.endpoint(0, j)));
  PartitionSpec result(m, n, col.partition().row_cuts, row.partition().col_cuts);
  return SuperIntervalMatrix::build(d, std::move(result), std::move(out));
}

SuperIntervalMatrix gram(const SuperIntervalMatrix& a) {
  return major_product(transpose(a), a);
}

SuperIntervalMatrix extended_product(const SuperIntervalMatrix& a,
                                     const SuperIntervalMatrix& b) {
  require_product_domain(a, b);
  ConformabilityReport conf = conformability(a, b);
  if (!conf.flat_ok) throw NotConformable(conf.detail);

  const ScalarDomain& d = a.domain();
  int m = a.rows(), n = b.cols(), inner = a.cols();
  PartitionSpec result(m, n, a.partition().row_cuts, b.partition().col_cuts);

  if (d.is_residues()) {
    std::uint64_t mod = d.modulus();
    std::vector<std::uint64_t> av = unboxed(a), bv = unboxed(b);
    std::vector<std::uint64_t> acc;
    acc.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        std::uint64_t sum = 0;
        for (int k = 0; k < inner; ++k)
          sum = (sum + av[static_cast<std::size_t>(i * inner + k)] *
                           bv[static_cast<std::size_t>(k * n + j)] % mod) %
                mod;
        acc.push_back(sum);
      }
    return SuperIntervalMatrix::build(d, std::move(result), boxed(acc));
  }

  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      Scalar acc = scalar_mul(d, a.endpoint(i, 0), b.endpoint(0, j));
      for (int k = 1; k < inner; ++k)
        acc = scalar_add(d, acc, scalar_mul(d, a.endpoint(i, k), b.endpoint(k, j)));
      out.push_back(std::move(acc));
    }
  return SuperIntervalMatrix::build(d, std::move(result), std::move(out));
}

}  // namespace simat
