#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "simat/matrix.hpp"
#include "simat/structure/report.hpp"

namespace simat {

enum class CarrierOp { Add, Hadamard, Min, Max };
std::string carrier_op_name(CarrierOp op);
CarrierOp parse_carrier_op(const std::string& name);

/// Search limits for the structure lab. Exhaustive verdicts are used whenever
/// the relevant tuple count fits exhaustive_limit; otherwise sample_count
/// seeded tuples are drawn. coeff_bound caps coefficient search over the
/// infinite scalar domains (verdicts above the bound stay unknown).
struct Budget {
  std::uint64_t exhaustive_limit = 100000;
  int sample_count = 1000;
  std::uint64_t seed = 0;
  int coeff_bound = 32;
};

/// A family of same-type super interval matrices closed under one operation:
/// the universe the structure lab quantifies over.
///
/// entry_pool restricts/samples endpoint values (defaults to the whole domain
/// for Residues; the other domains get a small default sampling pool).
/// pattern ties cells together: cells with equal class share one value
/// ("constant" = all cells in one class). Untied cells vary independently.
struct CarrierSpec {
  ScalarDomain domain = ScalarDomain::nat();
  PartitionSpec partition;
  std::optional<std::vector<Scalar>> entry_pool;
  CarrierOp op = CarrierOp::Add;
  std::optional<std::vector<int>> pattern;  // size rows*cols, classes 0..k-1

  static CarrierSpec constant_pattern(ScalarDomain d, PartitionSpec p, CarrierOp op);

  void validate() const;
  int cells() const { return partition.rows * partition.cols; }
  int classes() const;
  /// The effective endpoint pool: entry_pool, or the whole residue domain,
  /// or a default sampling pool for the infinite domains.
  std::vector<Scalar> effective_pool() const;
  /// |pool|^classes when representable, nullopt for infinite carriers.
  std::optional<BigInt> cardinality() const;
  /// True when the pool is the carrier itself rather than a sampling device:
  /// always over Residues; over the infinite domains only when the explicit
  /// pool is closed under the carrier op (a finite subcarrier). An unclosed
  /// pool over nat/qplus/unit merely guides sampling of the infinite carrier.
  bool pool_is_universe() const;

  SuperIntervalMatrix zero() const { return SuperIntervalMatrix::zero(domain, partition); }
  /// Grid from per-class values (pattern-expanded).
  SuperIntervalMatrix expand(const std::vector<Scalar>& class_values) const;
  bool contains(const SuperIntervalMatrix& x) const;
};

/// How scalars act on a carrier. Type I (bare scalars from a semifield) and
/// type II (interval scalars [0,s]) scale endpoints identically; set,
/// semigroup and group actions progressively add axioms checked elsewhere.
enum class ActionKind { TypeI, TypeII, Set, Semigroup, Group };
std::string action_kind_name(ActionKind k);
ActionKind parse_action_kind(const std::string& name);

struct ScalarActionSpec {
  ActionKind kind = ActionKind::TypeI;
  ScalarDomain scalar_domain = ScalarDomain::nat();
  std::optional<std::vector<Scalar>> scalar_set;  // finite subset when present

  void validate() const;
  /// Finite scalar list: scalar_set, the whole residue domain, or the
  /// 0..coeff_bound integers (plus bounded fractions for qplus).
  std::vector<Scalar> coefficients(int coeff_bound) const;
  bool finite() const { return scalar_set.has_value() || scalar_domain.is_residues(); }
};

/// Deterministic endpoint-grid sampler (splitmix64).
class CarrierSampler {
 public:
  CarrierSampler(const CarrierSpec& spec, std::uint64_t seed);
  SuperIntervalMatrix next();

 private:
  const CarrierSpec& spec_;
  std::vector<Scalar> pool_;
  std::uint64_t state_;
};

std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag);

/// Odometer over class-value combinations, first class most significant, pool
/// sorted ascending: enumeration order is lexicographic on endpoint grids.
class CarrierEnumerator {
 public:
  explicit CarrierEnumerator(const CarrierSpec& spec);
  /// Element count if it fits limit, nullopt otherwise.
  std::optional<std::uint64_t> size_within(std::uint64_t limit) const;
  void first(std::vector<std::size_t>& idx) const;
  bool next(std::vector<std::size_t>& idx) const;
  std::vector<Scalar> values(const std::vector<std::size_t>& idx) const;
  SuperIntervalMatrix matrix(const std::vector<std::size_t>& idx) const;
  const std::vector<Scalar>& pool() const { return pool_; }
  int classes() const { return classes_; }

 private:
  const CarrierSpec& spec_;
  std::vector<Scalar> pool_;
  int classes_;
};

}  // namespace simat
