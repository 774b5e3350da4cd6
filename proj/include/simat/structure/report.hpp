#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simat/matrix.hpp"

namespace simat {

enum class Verdict {
  HoldsExhaustive,  // every relevant tuple of the finite carrier was checked
  HoldsSampled,     // seeded random tuples only; records seed and sample count
  HoldsStructural,  // endpoint-trivial argument (e.g. a+b=0 => a=b=0 in N)
  Fails,            // carries a reproducible witness
  Inapplicable,
  Unknown,  // search exhausted its budget without a verdict
};

std::string verdict_name(Verdict v);
bool verdict_holds(Verdict v);

struct AxiomResult {
  std::string axiom;
  Verdict verdict = Verdict::Unknown;
  std::vector<SuperIntervalMatrix> witness;  // nonempty whenever verdict == Fails
  std::string note;
};

/// Machine-readable outcome of a structure-lab check: one verdict per axiom,
/// witnesses for failures, carrier cardinality when finite.
struct StructureReport {
  std::string subject;
  std::vector<AxiomResult> axioms;
  std::optional<BigInt> carrier_size;
  std::uint64_t seed = 0;
  int sample_count = 0;

  /// True when no axiom fails and none is unknown.
  bool ok() const;
  const AxiomResult* find(const std::string& axiom) const;
  void add(std::string axiom, Verdict v, std::vector<SuperIntervalMatrix> witness = {},
           std::string note = "");
};

}  // namespace simat
