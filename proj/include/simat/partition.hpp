#pragma once

#include <cstdint>
#include <vector>

#include "simat/error.hpp"
#include "simat/scalar.hpp"

namespace simat {

/// Row-cut and column-cut sets that turn an m x n grid into a super matrix.
/// A cut at index k separates row/column k from k+1 (1-based, strictly inside
/// the grid). Empty cut sets give the trivial (uncut) matrix.
struct PartitionSpec {
  int rows = 1;
  int cols = 1;
  std::vector<int> row_cuts;  // strictly increasing subset of {1..rows-1}
  std::vector<int> col_cuts;  // strictly increasing subset of {1..cols-1}

  PartitionSpec() = default;
  PartitionSpec(int m, int n, std::vector<int> rcuts = {}, std::vector<int> ccuts = {});

  bool trivial() const { return row_cuts.empty() && col_cuts.empty(); }
  int block_rows() const { return static_cast<int>(row_cuts.size()) + 1; }
  int block_cols() const { return static_cast<int>(col_cuts.size()) + 1; }

  friend bool operator==(const PartitionSpec& a, const PartitionSpec& b) {
    return a.rows == b.rows && a.cols == b.cols && a.row_cuts == b.row_cuts &&
           a.col_cuts == b.col_cuts;
  }
  friend bool operator!=(const PartitionSpec& a, const PartitionSpec& b) { return !(a == b); }
};

struct IndexRange {
  int begin = 0;  // inclusive
  int end = 0;    // exclusive
  int size() const { return end - begin; }
  friend bool operator==(const IndexRange& a, const IndexRange& b) {
    return a.begin == b.begin && a.end == b.end;
  }
};

struct BlockIndex {
  int block_row = 0;
  int block_col = 0;
  IndexRange row_range;
  IndexRange col_range;
};

/// All blocks of p in row-major block order; they tile the grid exactly.
std::vector<BlockIndex> blocks(const PartitionSpec& p);

/// The half-open ranges a cut set induces on 0..extent.
std::vector<IndexRange> block_ranges(const std::vector<int>& cuts, int extent);

/// Rows/cols swapped, row cuts and column cuts exchanged.
PartitionSpec transpose_partition(const PartitionSpec& p);

/// True iff dims and both cut sets agree -- the precondition for entrywise ops.
bool same_type(const PartitionSpec& p, const PartitionSpec& q);

/// All 2^(m-1) * 2^(n-1) cut-set combinations in binary-counter order (row
/// cuts as the outer counter). The trivial spec is omitted unless requested.
std::vector<PartitionSpec> enumerate_partitions(int m, int n, bool include_trivial);

/// 2^(m-1) * 2^(n-1) - 1: the proper (at least one cut) partition count.
BigInt count_proper_partitions(int m, int n);

}  // namespace simat
