#pragma once

#include "simat/structure/carrier.hpp"

namespace simat {

struct SpanResult {
  /// Linear combinations sum c_i * g_i with coefficients from the action's
  /// (finite or bounded) coefficient list, deduplicated, enumeration order.
  std::vector<SuperIntervalMatrix> elements;
  /// True when the coefficient list was bounded (infinite scalar domain), so
  /// the span set is a truncation, not the full closure.
  bool truncated = false;
};

/// Set spanned by the generators: over Residues this is the exact submodule;
/// over nat/qplus coefficients range over {0..coeff_bound} (and bounded
/// fractions for qplus), never extrapolated. BudgetExceeded when the
/// combination count or the result set outgrows the exhaustive limit.
SpanResult span(const std::vector<SuperIntervalMatrix>& generators,
                const ScalarActionSpec& action, const Budget& budget);

struct SpanMembership {
  bool member = false;
  bool search_complete = false;            // every bounded combination considered
  std::vector<Scalar> coefficients;        // one per generator when member
};

/// Is target a bounded-coefficient combination of the generators? Exact over
/// Residues (Howell form); depth-first with monotone pruning over nat/qplus.
SpanMembership span_contains(const SuperIntervalMatrix& target,
                             const std::vector<SuperIntervalMatrix>& generators,
                             const ScalarActionSpec& action, const Budget& budget);

enum class IndependenceMode { Pairwise, Combination };

struct IndependenceResult {
  bool independent = true;
  /// When dependent: set[element] equals the combination (or single scalar
  /// multiple) described by relation over the other indices.
  std::size_t element = 0;
  std::vector<std::pair<std::size_t, Scalar>> relation;
  std::string note;
};

/// Pairwise: no element is a scalar multiple of another (Def of semigroup
/// independence). Combination: no element lies in the bounded span of the
/// others. BudgetExceeded when the bounded search cannot finish.
IndependenceResult is_independent(const std::vector<SuperIntervalMatrix>& set,
                                  const ScalarActionSpec& action, IndependenceMode mode,
                                  const Budget& budget);

struct GeneratingSet {
  std::vector<SuperIntervalMatrix> generators;
  BigInt carrier_size = 0;
};

/// Greedy minimal generating set under add-closure plus scalar action;
/// candidates considered in lexicographic order. Finite carriers only.
GeneratingSet find_generating_set(const CarrierSpec& c, const ScalarActionSpec& action,
                                  const Budget& budget);

struct BasisDemo {
  std::vector<SuperIntervalMatrix> basis;            // spans, 4 elements
  std::vector<SuperIntervalMatrix> independent_set;  // independent, 5 elements
  SuperIntervalMatrix non_spanned_witness;           // outside the larger set's span
};

/// The worked demonstration that an independent set can outgrow a basis:
/// carrier 1x4 with cuts {1,3} over nat; returns the 4-element basis and the
/// 5-element independent non-spanning set, both re-verified on the way out.
BasisDemo independent_exceeds_basis_demo(const Budget& budget);

/// Direct-sum test for generated subspaces: do the parts cover the whole
/// carrier, and are the pairwise intersections trivial? A covering sum with
/// nontrivial intersections is flagged as a pseudo direct sum.
StructureReport check_direct_sum(const std::vector<std::vector<SuperIntervalMatrix>>& parts,
                                 const CarrierSpec& whole, const ScalarActionSpec& action,
                                 const Budget& budget);

}  // namespace simat
