#include "simat/partition.hpp"

namespace simat {

namespace {

void check_cuts(const std::vector<int>& cuts, int extent, const char* which) {
  int prev = 0;
  for (int c : cuts) {
    if (c <= prev || c >= extent)
      throw ShapeMismatch(std::string(which) + " cut " + std::to_string(c) +
                          " is not strictly inside the grid");
    prev = c;
  }
}

std::vector<IndexRange> ranges_from_cuts(const std::vector<int>& cuts, int extent) {
  std::vector<IndexRange> out;
  int start = 0;
  for (int c : cuts) {
    out.push_back({start, c});
    start = c;
  }
  out.push_back({start, extent});
  return out;
}

std::vector<int> cuts_from_mask(std::uint32_t mask, int extent) {
  std::vector<int> cuts;
  for (int k = 1; k < extent; ++k)
    if (mask & (1u << (k - 1))) cuts.push_back(k);
  return cuts;
}

}  // namespace

PartitionSpec::PartitionSpec(int m, int n, std::vector<int> rcuts, std::vector<int> ccuts)
    : rows(m), cols(n), row_cuts(std::move(rcuts)), col_cuts(std::move(ccuts)) {
  if (m < 1 || n < 1) throw ShapeMismatch("matrix dimensions must be positive");
  check_cuts(row_cuts, rows, "row");
  check_cuts(col_cuts, cols, "column");
}

std::vector<IndexRange> block_ranges(const std::vector<int>& cuts, int extent) {
  return ranges_from_cuts(cuts, extent);
}

std::vector<BlockIndex> blocks(const PartitionSpec& p) {
  auto row_ranges = ranges_from_cuts(p.row_cuts, p.rows);
  auto col_ranges = ranges_from_cuts(p.col_cuts, p.cols);
  std::vector<BlockIndex> out;
  out.reserve(row_ranges.size() * col_ranges.size());
  for (int i = 0; i < static_cast<int>(row_ranges.size()); ++i)
    for (int j = 0; j < static_cast<int>(col_ranges.size()); ++j)
      out.push_back({i, j, row_ranges[static_cast<std::size_t>(i)],
                     col_ranges[static_cast<std::size_t>(j)]});
  return out;
}

PartitionSpec transpose_partition(const PartitionSpec& p) {
  return PartitionSpec(p.cols, p.rows, p.col_cuts, p.row_cuts);
}

bool same_type(const PartitionSpec& p, const PartitionSpec& q) { return p == q; }

std::vector<PartitionSpec> enumerate_partitions(int m, int n, bool include_trivial) {
  if (m < 1 || n < 1) throw ShapeMismatch("matrix dimensions must be positive");
  if (m > 21 || n > 21) throw BudgetExceeded("partition enumeration limited to dims <= 21");
  std::uint32_t row_masks = 1u << (m - 1);
  std::uint32_t col_masks = 1u << (n - 1);
  std::vector<PartitionSpec> out;
  for (std::uint32_t rm = 0; rm < row_masks; ++rm)
    for (std::uint32_t cm = 0; cm < col_masks; ++cm) {
      if (rm == 0 && cm == 0 && !include_trivial) continue;
      out.emplace_back(m, n, cuts_from_mask(rm, m), cuts_from_mask(cm, n));
    }
  return out;
}

BigInt count_proper_partitions(int m, int n) {
  if (m < 1 || n < 1) throw ShapeMismatch("matrix dimensions must be positive");
  BigInt total = BigInt(1) << (m - 1);
  total <<= (n - 1);
  return total - 1;
}

}  // namespace simat
