#include <doctest.h>

#include <json.hpp>

#include "simat/io.hpp"

using namespace simat;

TEST_CASE("parse builds the worked z12 row") {
  SuperIntervalMatrix x = parse_matrix("domain: z12\n8 4 2 | 6 9\n");
  CHECK(x.domain() == ScalarDomain::residues(12));
  CHECK(x.partition() == PartitionSpec(1, 5, {}, {3}));
  CHECK(x.endpoint(0, 0) == Scalar(8));
  CHECK(x.endpoint(0, 4) == Scalar(9));
}

TEST_CASE("render is canonical and round-trips") {
  SuperIntervalMatrix sum = SuperIntervalMatrix::build(
      ScalarDomain::nat(), PartitionSpec(1, 5, {}, {2}),
      {Scalar(11), Scalar(3), Scalar(4), Scalar(6), Scalar(5)});
  CHECK(render_matrix(sum) == "domain: nat\n11 3 | 4 6 5\n");
  CHECK(parse_matrix(render_matrix(sum)) == sum);

  SuperIntervalMatrix one = parse_matrix("domain: nat\n0\n");
  CHECK(one.rows() == 1);
  CHECK(one.cols() == 1);
  CHECK(one.is_zero());
  CHECK(parse_matrix(render_matrix(one)) == one);

  // Whitespace and comments normalize away.
  SuperIntervalMatrix padded = parse_matrix(
      "# a comment\n\ndomain: nat\n  11   3 |  4 6 5  \n");
  CHECK(padded == sum);
}

TEST_CASE("row cuts render as dash lines") {
  std::string text =
      "domain: z7\n"
      "1 2 | 3\n"
      "4 5 | 6\n"
      "---\n"
      "0 1 | 2\n";
  SuperIntervalMatrix m = parse_matrix(text);
  CHECK(m.partition() == PartitionSpec(3, 3, {2}, {2}));
  CHECK(render_matrix(m) == text);
}

TEST_CASE("unit endpoints accept decimals, render as fractions") {
  SuperIntervalMatrix m = parse_matrix("domain: unit\n0.3 1 | 1/2\n");
  CHECK(m.endpoint(0, 0) == Scalar::fraction(3, 10));
  CHECK(render_matrix(m) == "domain: unit\n3/10 1 | 1/2\n");
  CHECK(render_matrix(m, RenderFormat::Text, true) == "domain: unit\n0.3 1 | 0.5\n");
  CHECK(parse_matrix(render_matrix(m)) == m);
  CHECK(parse_matrix(render_matrix(m, RenderFormat::Text, true)) == m);
}

TEST_CASE("json rendering carries the full description") {
  SuperIntervalMatrix m = parse_matrix("domain: z5\n1 | 2\n---\n3 | 4\n");
  nlohmann::json j = nlohmann::json::parse(render_matrix(m, RenderFormat::Json));
  CHECK(j["domain"] == "z5");
  CHECK(j["dims"] == nlohmann::json({2, 2}));
  CHECK(j["row_cuts"] == nlohmann::json({1}));
  CHECK(j["col_cuts"] == nlohmann::json({1}));
  CHECK(j["endpoints"][0][0] == "1");
  CHECK(j["endpoints"][1][1] == "4");
}

TEST_CASE("parse errors carry positions and name the defect") {
  CHECK_THROWS_AS(parse_matrix("1 2 3\n"), ParseError);          // missing header
  CHECK_THROWS_AS(parse_matrix("domain: z12\n"), ParseError);    // empty body
  CHECK_THROWS_AS(parse_matrix("domain: bogus\n1\n"), ParseError);
  // Inconsistent column cuts between rows.
  CHECK_THROWS_AS(parse_matrix("domain: nat\n1 2 | 3\n1 | 2 3\n"), ParseError);
  // Ragged rows.
  CHECK_THROWS_AS(parse_matrix("domain: nat\n1 2\n1 2 3\n"), ParseError);
  // Endpoint outside the domain.
  CHECK_THROWS_AS(parse_matrix("domain: z12\n12\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("domain: nat\n1/2\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("domain: unit\n2\n"), ParseError);
  // Stray cuts.
  CHECK_THROWS_AS(parse_matrix("domain: nat\n| 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("domain: nat\n1 2 |\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix("domain: nat\n---\n1 2\n"), ParseError);

  try {
    parse_matrix("domain: nat\n1 2 | 3\n1 | 2 3\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("malformed input always raises a library error, never crashes") {
  std::uint64_t state = 555;
  auto rnd = [&](std::uint64_t bound) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return (state >> 33) % bound;
  };
  const char alphabet[] = "0123456789 |/-.\n#:zabq ";
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    if (rnd(2)) text += "domain: z12\n";
    std::size_t len = rnd(60);
    for (std::size_t i = 0; i < len; ++i)
      text += alphabet[rnd(sizeof(alphabet) - 1)];
    try {
      SuperIntervalMatrix m = parse_matrix(text);
      CHECK(parse_matrix(render_matrix(m)) == m);  // successes still round-trip
    } catch (const Error&) {
      // any library error is acceptable; crashes and foreign exceptions are not
    }
  }
}

TEST_CASE("random matrices round-trip across all domains") {
  // Property: parse(render(m)) == m over seeded random grids, cuts included.
  std::uint64_t state = 2024;
  auto rnd = [&](std::uint64_t bound) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return (state >> 33) % bound;
  };
  std::vector<ScalarDomain> domains = {ScalarDomain::residues(2), ScalarDomain::residues(97),
                                       ScalarDomain::nat(), ScalarDomain::qplus(),
                                       ScalarDomain::unit()};
  for (int trial = 0; trial < 200; ++trial) {
    const ScalarDomain& d = domains[trial % domains.size()];
    int m = 1 + static_cast<int>(rnd(4));
    int n = 1 + static_cast<int>(rnd(4));
    std::vector<int> rcuts, ccuts;
    for (int i = 1; i < m; ++i)
      if (rnd(2)) rcuts.push_back(i);
    for (int j = 1; j < n; ++j)
      if (rnd(2)) ccuts.push_back(j);
    std::vector<Scalar> grid;
    for (int i = 0; i < m * n; ++i) {
      switch (d.kind()) {
        case DomainKind::Residues:
          grid.emplace_back(rnd(d.modulus()));
          break;
        case DomainKind::NonnegIntegers:
          grid.emplace_back(rnd(1000));
          break;
        case DomainKind::NonnegRationals:
          grid.push_back(Scalar::fraction(BigInt(rnd(100)), BigInt(1 + rnd(9))));
          break;
        case DomainKind::UnitRationals: {
          std::uint64_t den = 1 + rnd(9);
          grid.push_back(Scalar::fraction(BigInt(rnd(den + 1)), BigInt(den)));
          break;
        }
      }
    }
    SuperIntervalMatrix mat = SuperIntervalMatrix::build(
        d, PartitionSpec(m, n, rcuts, ccuts), std::move(grid));
    CHECK(parse_matrix(render_matrix(mat)) == mat);
    CHECK(parse_matrix(render_matrix(mat, RenderFormat::Text, true)) == mat);
  }
}

TEST_CASE("round-trip is identity across domains and shapes") {
  // Property: parse(render(m)) == m for a spread of shapes, cuts and domains.
  std::vector<std::string> files = {
      "domain: z2\n1 | 0 1\n",
      "domain: z43\n0 42 | 7\n---\n1 2 | 3\n",
      "domain: nat\n5\n12\n---\n0\n",
      "domain: qplus\n1/3 7 | 22/7\n",
      "domain: unit\n0 1/4 | 1/2 3/4 1\n",
      "domain: z10\n1 2\n3 4\n---\n5 6\n",
  };
  for (const std::string& f : files) {
    SuperIntervalMatrix m = parse_matrix(f);
    CHECK(render_matrix(m) == f);
    CHECK(parse_matrix(render_matrix(m)) == m);
  }
}
