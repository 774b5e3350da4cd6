#pragma once

#include <functional>

#include "simat/structure/carrier.hpp"

namespace simat {

/// Carrier operation applied at matrix level (min/max are entrywise over any
/// ordered domain; add/hadamard delegate to the matrix module).
SuperIntervalMatrix apply_carrier_op(CarrierOp op, const SuperIntervalMatrix& a,
                                     const SuperIntervalMatrix& b);

/// Closure, associativity, commutativity and identity existence of (carrier, op).
StructureReport check_semigroup(const CarrierSpec& c, const Budget& b);

/// Semigroup verdicts plus inverse existence; op must be add. Over Residues
/// the inverse grid of a is n-a and every element has one; over nat/qplus any
/// nonzero element is a failure witness.
StructureReport check_group(const CarrierSpec& c, const Budget& b);

/// Additive monoid + multiplicative semigroup + two-sided distributivity.
/// The carrier's op field is ignored; add and hadamard are both exercised.
StructureReport check_semiring(const CarrierSpec& c, const Budget& b);

/// Strictness of addition: a + b = 0 forces a = b = 0. Fails with an explicit
/// witness pair over Residues, holds structurally over nat/qplus.
StructureReport check_strictness(const CarrierSpec& c, const Budget& b);

/// Lattice laws of min/max on an ordered-domain carrier: idempotence,
/// commutativity, associativity, absorption, mutual distributivity, bounds.
StructureReport check_lattice(const CarrierSpec& c, const Budget& b);

enum class WitnessKind { ZeroDivisorPair, Idempotent, UnitPair, AdditiveInversePair };
std::string witness_kind_name(WitnessKind k);

struct WitnessSearch {
  /// Each entry is the tuple for one witness (pair kinds: two matrices).
  std::vector<std::vector<SuperIntervalMatrix>> witnesses;
  /// Fails-to-find under an exhausted budget is Unknown, not NoneFound.
  Verdict verdict = Verdict::Unknown;
  std::string note;
};

/// Deterministic search (lexicographically least first), every hit re-verified
/// before emission.
WitnessSearch find_witnesses(const CarrierSpec& c, WitnessKind kind, const Budget& b,
                             int max_results = 5);

/// Re-checks a claimed witness tuple with the public matrix operations.
bool verify_witness(const CarrierSpec& c, WitnessKind kind,
                    const std::vector<SuperIntervalMatrix>& tuple);

/// Ideal test: the sub-add-monoid generated by `generators` absorbs hadamard
/// multiplication by carrier elements.
StructureReport check_ideal(const std::vector<SuperIntervalMatrix>& generators,
                            const CarrierSpec& c, const Budget& b);

}  // namespace simat
