#pragma once

#include <string>

#include "simat/matrix.hpp"

namespace simat {

/// Why (or why not) two matrices multiply: flat chaining of dimensions and
/// block chaining of cut sets. block_ok implies flat_ok.
struct ConformabilityReport {
  bool flat_ok = false;   // cols(A) == rows(B)
  bool block_ok = false;  // col_cuts(A) == row_cuts(B), given flat_ok
  std::string detail;
};

ConformabilityReport conformability(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b);

/// Block-respecting product: block (i,k) of the result is the left-to-right
/// sum over j of blockA(i,j) * blockB(j,k). Result partition is
/// (row_cuts(A), col_cuts(B)). Requires flat (NotConformable) and block
/// (PartitionMismatch) conformability and a common non-unit domain.
SuperIntervalMatrix major_product(const SuperIntervalMatrix& a, const SuperIntervalMatrix& b);

/// Column (n x 1) times row (1 x m): entry (i,j) = col_i * row_j. Partition
/// is (row_cuts of col, col_cuts of row); the single interior dimension makes
/// block conformability automatic.
SuperIntervalMatrix outer_product(const SuperIntervalMatrix& col,
                                  const SuperIntervalMatrix& row);

/// transpose(A) * A via the major product; always block-conformable.
SuperIntervalMatrix gram(const SuperIntervalMatrix& a);

/// Ordinary endpoint matrix product computed ignoring partitions, then
/// re-partitioned with (row_cuts(A), col_cuts(B)). Only flat conformability
/// is required.
SuperIntervalMatrix extended_product(const SuperIntervalMatrix& a,
                                     const SuperIntervalMatrix& b);

}  // namespace simat
