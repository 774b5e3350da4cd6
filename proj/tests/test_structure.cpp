#include <doctest.h>

#include "simat/structure/checks.hpp"
#include "simat/structure/linear_map.hpp"

using namespace simat;

namespace {

SuperIntervalMatrix mk(const ScalarDomain& d, const PartitionSpec& p,
                       std::initializer_list<long long> vs) {
  std::vector<Scalar> grid;
  for (long long v : vs) grid.emplace_back(v);
  return SuperIntervalMatrix::build(d, p, std::move(grid));
}

Verdict verdict_of(const StructureReport& rep, const std::string& axiom) {
  const AxiomResult* a = rep.find(axiom);
  REQUIRE(a != nullptr);
  return a->verdict;
}

}  // namespace

TEST_CASE("tiny additive carrier is an exhaustive semigroup and group") {
  CarrierSpec c;
  c.domain = ScalarDomain::residues(2);
  c.partition = PartitionSpec(1, 2, {}, {1});
  c.op = CarrierOp::Add;
  Budget b;

  StructureReport sg = check_semigroup(c, b);
  CHECK(sg.ok());
  CHECK(*sg.carrier_size == 4);
  CHECK(verdict_of(sg, "associativity") == Verdict::HoldsExhaustive);
  CHECK(verdict_of(sg, "commutativity") == Verdict::HoldsExhaustive);
  CHECK(verdict_of(sg, "identity") == Verdict::HoldsExhaustive);

  StructureReport g = check_group(c, b);
  CHECK(g.ok());
  CHECK(verdict_of(g, "inverses") == Verdict::HoldsExhaustive);

  // DERIVED oracle: brute force the four elements by hand and re-verify every
  // axiom the report claims.
  std::vector<SuperIntervalMatrix> all;
  for (long long i = 0; i < 2; ++i)
    for (long long j = 0; j < 2; ++j) all.push_back(mk(c.domain, c.partition, {i, j}));
  for (const auto& x : all)
    for (const auto& y : all) {
      CHECK(add(x, y) == add(y, x));
      for (const auto& z : all) CHECK(add(add(x, y), z) == add(x, add(y, z)));
    }
  for (const auto& x : all) {
    CHECK(add(x, all[0]) == x);  // all[0] is the zero matrix
    bool has_inverse = false;
    for (const auto& y : all) has_inverse |= add(x, y).is_zero();
    CHECK(has_inverse);
  }
}

TEST_CASE("hadamard carrier over z12 samples associativity") {
  CarrierSpec c;
  c.domain = ScalarDomain::residues(12);
  c.partition = PartitionSpec(1, 5, {}, {3});
  c.op = CarrierOp::Hadamard;
  Budget b;
  StructureReport rep = check_semigroup(c, b);
  CHECK(rep.ok());
  CHECK(verdict_of(rep, "associativity") == Verdict::HoldsSampled);
  // 12^5 elements outgrow the default exhaustive budget.
  CHECK(verdict_of(rep, "identity") == Verdict::HoldsSampled);
}

TEST_CASE("unit min carrier is a semigroup with all-ones identity") {
  CarrierSpec c;
  c.domain = ScalarDomain::unit();
  c.partition = PartitionSpec(1, 3, {}, {1});
  c.op = CarrierOp::Min;
  Budget b;
  StructureReport rep = check_semigroup(c, b);
  CHECK(rep.ok());
  const AxiomResult* id = rep.find("identity");
  REQUIRE(id != nullptr);
  REQUIRE(id->witness.size() == 1);
  CHECK(id->witness[0] == SuperIntervalMatrix::ones(c.domain, c.partition));
}

TEST_CASE("full residue carriers form additive groups; nat does not") {
  // 2x3 over z43, any cuts: a group (sampled; the carrier has 43^6 elements).
  CarrierSpec big;
  big.domain = ScalarDomain::residues(43);
  big.partition = PartitionSpec(2, 3, {1}, {2});
  big.op = CarrierOp::Add;
  Budget b;
  StructureReport rep = check_group(big, b);
  CHECK(rep.ok());
  CHECK(verdict_of(rep, "inverses") == Verdict::HoldsSampled);
  CHECK(*rep.carrier_size == BigInt(43) * 43 * 43 * 43 * 43 * 43);

  // nat carrier: inverses fail with the least nonzero witness.
  CarrierSpec nats;
  nats.domain = ScalarDomain::nat();
  nats.partition = PartitionSpec(1, 3, {}, {1});
  nats.op = CarrierOp::Add;
  StructureReport bad = check_group(nats, b);
  CHECK_FALSE(bad.ok());
  const AxiomResult* inv = bad.find("inverses");
  REQUIRE(inv != nullptr);
  CHECK(inv->verdict == Verdict::Fails);
  REQUIRE(inv->witness.size() == 1);
  CHECK_FALSE(inv->witness[0].is_zero());

  // The zero-only carrier is vacuously a group.
  CarrierSpec zero_only = nats;
  zero_only.entry_pool = std::vector<Scalar>{Scalar(0)};
  CHECK(check_group(zero_only, b).ok());
}

TEST_CASE("semiring axioms") {
  Budget b;
  // 1x5 cuts {2} over nat, sampled from the default pool.
  CarrierSpec s;
  s.domain = ScalarDomain::nat();
  s.partition = PartitionSpec(1, 5, {}, {2});
  StructureReport rep = check_semiring(s, b);
  CHECK(rep.ok());
  CHECK(verdict_of(rep, "distributivity") == Verdict::HoldsSampled);
  CHECK(verdict_of(rep, "add-closure") == Verdict::HoldsStructural);

  // 1x6 cuts {2,3} over z18.
  CarrierSpec p;
  p.domain = ScalarDomain::residues(18);
  p.partition = PartitionSpec(1, 6, {}, {2, 3});
  CHECK(check_semiring(p, b).ok());

  // The worked distributivity triple evaluates to ([0,77] [0,12] | [0,8] [0,6] [0,20]).
  ScalarDomain nat = ScalarDomain::nat();
  PartitionSpec part(1, 5, {}, {2});
  SuperIntervalMatrix x = mk(nat, part, {3, 2, 1, 5, 1});
  SuperIntervalMatrix y = mk(nat, part, {8, 1, 3, 1, 4});
  SuperIntervalMatrix z = mk(nat, part, {7, 4, 2, 1, 4});
  SuperIntervalMatrix left = hadamard(add(x, y), z);
  SuperIntervalMatrix right = add(hadamard(x, z), hadamard(y, z));
  SuperIntervalMatrix expect = mk(nat, part, {77, 12, 8, 6, 20});
  CHECK(left == expect);
  CHECK(right == expect);
}

TEST_CASE("pools over infinite domains: closed pools are carriers, open pools sample") {
  Budget b;
  // {0..9} under addition over nat is not closed: it only guides sampling,
  // so the carrier stays infinite and closure holds structurally.
  CarrierSpec sampling;
  sampling.domain = ScalarDomain::nat();
  sampling.partition = PartitionSpec(1, 5, {}, {2});
  sampling.op = CarrierOp::Add;
  std::vector<Scalar> tens;
  for (int v = 0; v <= 9; ++v) tens.emplace_back(v);
  sampling.entry_pool = tens;
  CHECK_FALSE(sampling.pool_is_universe());
  StructureReport rep = check_semigroup(sampling, b);
  CHECK(rep.ok());
  CHECK(verdict_of(rep, "closure") == Verdict::HoldsStructural);
  CHECK(verdict_of(rep, "associativity") == Verdict::HoldsSampled);
  CHECK_FALSE(rep.carrier_size.has_value());

  // {0,1} under hadamard over nat is closed: a genuine finite subcarrier.
  CarrierSpec closed;
  closed.domain = ScalarDomain::nat();
  closed.partition = PartitionSpec(1, 3, {}, {1});
  closed.op = CarrierOp::Hadamard;
  closed.entry_pool = std::vector<Scalar>{Scalar(0), Scalar(1)};
  CHECK(closed.pool_is_universe());
  StructureReport rep2 = check_semigroup(closed, b);
  CHECK(rep2.ok());
  CHECK(verdict_of(rep2, "closure") == Verdict::HoldsExhaustive);
  CHECK(verdict_of(rep2, "associativity") == Verdict::HoldsExhaustive);
  CHECK(*rep2.carrier_size == 8);
}

TEST_CASE("non-canonical identities in restricted pools are discovered") {
  // {2,4} mod 6 is closed under multiplication and 4 is its identity.
  CarrierSpec c;
  c.domain = ScalarDomain::residues(6);
  c.partition = PartitionSpec(1, 2, {}, {1});
  c.op = CarrierOp::Hadamard;
  c.entry_pool = std::vector<Scalar>{Scalar(2), Scalar(4)};
  Budget b;
  StructureReport rep = check_semigroup(c, b);
  CHECK(rep.ok());
  const AxiomResult* id = rep.find("identity");
  REQUIRE(id != nullptr);
  CHECK(id->verdict == Verdict::HoldsExhaustive);
  REQUIRE(id->witness.size() == 1);
  CHECK(id->witness[0] == c.expand({Scalar(4), Scalar(4)}));

  // {2,3} mod 6 is closed under multiplication but has no identity: the
  // reported pair re-checks the least candidate's failure.
  CarrierSpec no_id = c;
  no_id.entry_pool = std::vector<Scalar>{Scalar(0), Scalar(2), Scalar(3)};
  StructureReport bad = check_semigroup(no_id, b);
  const AxiomResult* nid = bad.find("identity");
  REQUIRE(nid != nullptr);
  CHECK(nid->verdict == Verdict::Fails);
  REQUIRE(nid->witness.size() == 2);
  CHECK(hadamard(nid->witness[0], nid->witness[1]) != nid->witness[1]);
}

TEST_CASE("a closed restricted pool is a subsemiring carrier") {
  // Even residues inside z24 are closed under both operations.
  CarrierSpec c;
  c.domain = ScalarDomain::residues(24);
  c.partition = PartitionSpec(1, 5, {}, {1, 2, 3, 4});
  std::vector<Scalar> evens;
  for (std::uint64_t v = 0; v < 24; v += 2) evens.emplace_back(v);
  c.entry_pool = evens;
  Budget b;
  StructureReport rep = check_semiring(c, b);
  CHECK(verdict_of(rep, "add-closure") == Verdict::HoldsExhaustive);
  CHECK(verdict_of(rep, "mul-closure") == Verdict::HoldsExhaustive);

  // Odd residues are not closed under addition; the witness pair re-verifies.
  CarrierSpec odd = c;
  odd.entry_pool = std::vector<Scalar>{Scalar(1), Scalar(3)};
  odd.op = CarrierOp::Add;
  StructureReport bad = check_semigroup(odd, b);
  const AxiomResult* cl = bad.find("closure");
  REQUIRE(cl != nullptr);
  CHECK(cl->verdict == Verdict::Fails);
  REQUIRE(cl->witness.size() == 2);
  Scalar escapee = add(cl->witness[0], cl->witness[1]).endpoint(0, 0);
  CHECK(escapee != Scalar(1));
  CHECK(escapee != Scalar(3));
}

TEST_CASE("strictness") {
  Budget b;
  // z23 row: fails with a verified witness pair (lexicographically least).
  CarrierSpec w;
  w.domain = ScalarDomain::residues(23);
  w.partition = PartitionSpec(1, 7, {}, {2, 6});
  w.op = CarrierOp::Add;
  StructureReport rep = check_strictness(w, b);
  CHECK_FALSE(rep.ok());
  const AxiomResult* ax = rep.find("strictness");
  REQUIRE(ax != nullptr);
  REQUIRE(ax->witness.size() == 2);
  CHECK(add(ax->witness[0], ax->witness[1]).is_zero());
  CHECK_FALSE(ax->witness[0].is_zero());
  CHECK_FALSE(ax->witness[1].is_zero());

  // The paper's own counterexample pair re-verifies as an inverse pair.
  SuperIntervalMatrix px = mk(w.domain, w.partition, {20, 10, 15, 21, 22, 3, 15});
  SuperIntervalMatrix py = mk(w.domain, w.partition, {3, 13, 8, 2, 1, 20, 8});
  CHECK(verify_witness(w, WitnessKind::AdditiveInversePair, {px, py}));

  // nat carrier: strict by the endpoint argument.
  CarrierSpec v;
  v.domain = ScalarDomain::nat();
  v.partition = PartitionSpec(1, 8, {}, {4, 5});
  v.op = CarrierOp::Add;
  CHECK(verdict_of(check_strictness(v, b), "strictness") == Verdict::HoldsStructural);

  // Zero-only carrier: vacuously strict.
  CarrierSpec z0 = w;
  z0.entry_pool = std::vector<Scalar>{Scalar(0)};
  CHECK(verdict_of(check_strictness(z0, b), "strictness") == Verdict::HoldsExhaustive);
}

TEST_CASE("witness search over the z12 row carrier") {
  CarrierSpec c;
  c.domain = ScalarDomain::residues(12);
  c.partition = PartitionSpec(1, 5, {}, {3});
  c.op = CarrierOp::Hadamard;
  Budget b;

  // Zero divisors exist and every emitted pair re-verifies.
  WitnessSearch zd = find_witnesses(c, WitnessKind::ZeroDivisorPair, b, 3);
  CHECK(zd.witnesses.size() == 3);
  for (const auto& tup : zd.witnesses) CHECK(verify_witness(c, WitnessKind::ZeroDivisorPair, tup));

  // The paper's pair x.y = 0.
  SuperIntervalMatrix x = mk(c.domain, c.partition, {8, 4, 2, 6, 9});
  SuperIntervalMatrix y = mk(c.domain, c.partition, {3, 3, 6, 6, 4});
  CHECK(verify_witness(c, WitnessKind::ZeroDivisorPair, {x, y}));

  // Idempotents: x^2 = x for ([0,4] [0,9] [0,4] | [0,1] [0,9]).
  WitnessSearch idem = find_witnesses(c, WitnessKind::Idempotent, b, 5);
  CHECK(idem.witnesses.size() == 5);
  for (const auto& tup : idem.witnesses) CHECK(verify_witness(c, WitnessKind::Idempotent, tup));
  CHECK(verify_witness(c, WitnessKind::Idempotent, {mk(c.domain, c.partition, {4, 9, 4, 1, 9})}));

  // Units: the all-5 grid is self-inverse, and the paper's unit pair verifies.
  WitnessSearch units = find_witnesses(c, WitnessKind::UnitPair, b, 2);
  for (const auto& tup : units.witnesses) CHECK(verify_witness(c, WitnessKind::UnitPair, tup));
  SuperIntervalMatrix fives = mk(c.domain, c.partition, {5, 5, 5, 5, 5});
  CHECK(verify_witness(c, WitnessKind::UnitPair, {fives, fives}));
  SuperIntervalMatrix u1 = mk(c.domain, c.partition, {5, 7, 11, 1, 7});
  CHECK(verify_witness(c, WitnessKind::UnitPair, {u1, u1}));

  // Additive inverse pairs exist (the first is the zero pair).
  WitnessSearch inv = find_witnesses(c, WitnessKind::AdditiveInversePair, b, 2);
  CHECK(inv.witnesses.size() == 2);
  for (const auto& tup : inv.witnesses)
    CHECK(verify_witness(c, WitnessKind::AdditiveInversePair, tup));
}

TEST_CASE("a proper subgroup hides inside the multiplicative semigroup") {
  // Constant grids with nonzero entries over a prime modulus form a group
  // under hadamard -- the sub-structure witness for the full semigroup.
  ScalarDomain z13 = ScalarDomain::residues(13);
  PartitionSpec p(1, 8, {}, {2, 3});
  CarrierSpec sub;
  sub.domain = z13;
  sub.partition = p;
  sub.op = CarrierOp::Hadamard;
  sub.pattern = std::vector<int>(8, 0);
  std::vector<Scalar> nonzero;
  for (std::uint64_t v = 1; v < 13; ++v) nonzero.emplace_back(v);
  sub.entry_pool = nonzero;

  Budget b;
  StructureReport rep = check_semigroup(sub, b);
  CHECK(rep.ok());
  CHECK(verdict_of(rep, "closure") == Verdict::HoldsExhaustive);
  CHECK(verdict_of(rep, "associativity") == Verdict::HoldsExhaustive);

  // Every element has a multiplicative inverse inside the sub-carrier.
  SuperIntervalMatrix ones = SuperIntervalMatrix::ones(z13, p);
  for (std::uint64_t v = 1; v < 13; ++v) {
    SuperIntervalMatrix x = sub.expand({Scalar(v)});
    bool inverted = false;
    for (std::uint64_t w = 1; w < 13 && !inverted; ++w)
      inverted = hadamard(x, sub.expand({Scalar(w)})) == ones;
    CHECK(inverted);
  }

  // The ambient full carrier is not a group under hadamard (zero kills it),
  // which is what makes the subgroup proper.
  CarrierSpec ambient;
  ambient.domain = z13;
  ambient.partition = p;
  ambient.op = CarrierOp::Hadamard;
  SuperIntervalMatrix zero = SuperIntervalMatrix::zero(z13, p);
  bool zero_inverted = false;
  for (std::uint64_t w = 0; w < 13 && !zero_inverted; ++w)
    zero_inverted = hadamard(zero, ambient.expand(std::vector<Scalar>(8, Scalar(w)))) == ones;
  CHECK_FALSE(zero_inverted);
}

TEST_CASE("witness search over prime fields finds no zero divisors") {
  CarrierSpec c;
  c.domain = ScalarDomain::residues(7);
  c.partition = PartitionSpec(1, 1);
  c.op = CarrierOp::Hadamard;
  Budget b;
  CHECK_THROWS_AS(find_witnesses(c, WitnessKind::ZeroDivisorPair, b, 1), NoneFound);
}

TEST_CASE("ideal check for the z7 row semiring") {
  ScalarDomain z7 = ScalarDomain::residues(7);
  PartitionSpec p(1, 7, {}, {2, 3, 5});
  CarrierSpec c;
  c.domain = z7;
  c.partition = p;
  Budget b;

  // P: matrices supported on the first block -- an ideal.
  std::vector<SuperIntervalMatrix> pgens = {mk(z7, p, {1, 0, 0, 0, 0, 0, 0}),
                                            mk(z7, p, {0, 1, 0, 0, 0, 0, 0})};
  StructureReport ideal = check_ideal(pgens, c, b);
  CHECK(ideal.ok());
  CHECK(verdict_of(ideal, "absorption") == Verdict::HoldsSampled);

  // T: the constant-grid subsemiring -- not an ideal; the witness re-verifies.
  std::vector<SuperIntervalMatrix> tgens = {mk(z7, p, {1, 1, 1, 1, 1, 1, 1})};
  StructureReport not_ideal = check_ideal(tgens, c, b);
  CHECK_FALSE(not_ideal.ok());
  const AxiomResult* abs = not_ideal.find("absorption");
  REQUIRE(abs != nullptr);
  REQUIRE(abs->witness.size() == 2);
  SuperIntervalMatrix product = hadamard(abs->witness[0], abs->witness[1]);
  // The product escapes the constant-grid family.
  bool constant = true;
  for (const Scalar& e : product.endpoints()) constant &= (e == product.endpoints()[0]);
  CHECK_FALSE(constant);

  // The zero submodule is an ideal.
  CHECK(check_ideal({SuperIntervalMatrix::zero(z7, p)}, c, b).ok());

  // Generators outside the carrier are rejected.
  CarrierSpec other = c;
  other.partition = PartitionSpec(1, 7, {}, {2});
  CHECK_THROWS_AS(check_ideal({mk(z7, other.partition, {1, 0, 0, 0, 0, 0, 0})}, c, b),
                  GeneratorOutsideCarrier);
}

TEST_CASE("linear maps") {
  Budget b;
  ScalarDomain nat = ScalarDomain::nat();
  ScalarActionSpec action;
  action.kind = ActionKind::TypeI;
  action.scalar_domain = nat;

  // The coordinate-permuting-and-scaling operator on the 1x7 row space:
  // T(a1 | a2 a3 a4 | a5 a6 | a7) = (3a1 | a4 a3 a3 | a5 a6 | 5a7).
  CarrierSpec src;
  src.domain = nat;
  src.partition = PartitionSpec(1, 7, {}, {1, 4, 6});
  LinearMapFn op = [&](const SuperIntervalMatrix& v) {
    const auto& e = v.endpoints();
    return SuperIntervalMatrix::build(
        nat, PartitionSpec(1, 7, {}, {1, 4, 6}),
        {scalar_mul(nat, Scalar(3), e[0]), e[3], e[2], e[2], e[4], e[5],
         scalar_mul(nat, Scalar(5), e[6])});
  };
  StructureReport rep = check_linear_map(op, src, src, action, b);
  CHECK(rep.ok());
  CHECK(verdict_of(rep, "linearity") == Verdict::HoldsSampled);

  // The reshape of a 1x6 row into a 6x2 column vector, duplicating entries.
  CarrierSpec src2;
  src2.domain = nat;
  src2.partition = PartitionSpec(1, 6, {}, {1, 4});
  CarrierSpec dst2;
  dst2.domain = nat;
  dst2.partition = PartitionSpec(6, 2, {1, 3}, {});
  LinearMapFn reshape = [&](const SuperIntervalMatrix& v) {
    std::vector<Scalar> grid;
    for (const Scalar& e : v.endpoints()) {
      grid.push_back(e);
      grid.push_back(e);
    }
    return SuperIntervalMatrix::build(nat, dst2.partition, std::move(grid));
  };
  CHECK(check_linear_map(reshape, src2, dst2, action, b).ok());

  // The identity always passes; an affine shift fails with a witness.
  LinearMapFn ident = [](const SuperIntervalMatrix& v) { return v; };
  CHECK(check_linear_map(ident, src2, src2, action, b).ok());

  LinearMapFn affine = [&](const SuperIntervalMatrix& v) {
    return add(v, SuperIntervalMatrix::ones(nat, v.partition()));
  };
  StructureReport bad = check_linear_map(affine, src2, src2, action, b);
  CHECK_FALSE(bad.ok());
  const AxiomResult* lin = bad.find("linearity");
  REQUIRE(lin != nullptr);
  CHECK(lin->verdict == Verdict::Fails);
  REQUIRE(lin->witness.size() == 3);  // alpha, v, u

  // Small residue carrier: exhaustive verdicts.
  CarrierSpec zsrc;
  zsrc.domain = ScalarDomain::residues(3);
  zsrc.partition = PartitionSpec(1, 2, {}, {1});
  ScalarActionSpec zaction;
  zaction.kind = ActionKind::Group;
  zaction.scalar_domain = zsrc.domain;
  LinearMapFn swap_cells = [&](const SuperIntervalMatrix& v) {
    return SuperIntervalMatrix::build(v.domain(), v.partition(),
                                      {v.endpoints()[1], v.endpoints()[0]});
  };
  StructureReport zrep = check_linear_map(swap_cells, zsrc, zsrc, zaction, b);
  CHECK(zrep.ok());
  CHECK(verdict_of(zrep, "linearity") == Verdict::HoldsExhaustive);
}

TEST_CASE("lattice laws exhaustively over the five-point pool") {
  CarrierSpec c;
  c.domain = ScalarDomain::unit();
  c.partition = PartitionSpec(1, 3, {}, {1});
  c.op = CarrierOp::Min;
  c.entry_pool = std::vector<Scalar>{Scalar(0), Scalar::fraction(1, 4), Scalar::fraction(1, 2),
                                     Scalar::fraction(3, 4), Scalar(1)};
  Budget b;
  b.exhaustive_limit = 3000000;  // admits 125^3 triples
  StructureReport rep = check_lattice(c, b);
  CHECK(rep.ok());
  CHECK(verdict_of(rep, "associativity") == Verdict::HoldsExhaustive);
  CHECK(verdict_of(rep, "distributivity") == Verdict::HoldsExhaustive);
  CHECK(verdict_of(rep, "absorption") == Verdict::HoldsExhaustive);

  // Sampled fallback under the default budget.
  Budget small;
  StructureReport sampled = check_lattice(c, small);
  CHECK(sampled.ok());
  CHECK(verdict_of(sampled, "lattice-laws") == Verdict::HoldsSampled);
}
