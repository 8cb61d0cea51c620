#include <doctest.h>

#include "helpers.hpp"

using namespace quiverlab;
using namespace qltest;

namespace {

// Serialize, print, parse and read back.
template <class T, class F>
T round_trip(const T& value, F from) {
  return from(json::parse(json::to_json(value).dump()));
}

}  // namespace

TEST_CASE("permutations round trip") {
  const Permutation w({7, 10, 3, 4, 11, 1, 5, 6, 8, 2, 9});
  CHECK(json::to_json(w).dump() == "[7,10,3,4,11,1,5,6,8,2,9]");
  CHECK(round_trip(w, json::permutation_from) == w);
  const SignedPermutation s({3, 1, -2});
  CHECK(round_trip(s, json::signed_permutation_from) == s);
  CHECK_THROWS_AS(json::permutation_from(json::parse("[1,1]")), NotAPermutation);
}

TEST_CASE("rank conditions and lacing diagrams round trip") {
  CHECK(round_trip(golden_ranks(), json::rank_conditions_from) == golden_ranks());
  CHECK(json::rank_conditions_from(load("example1.json")) == golden_ranks());
  CHECK(json::lacing_diagram_from(load("example1.json").at("lacing")) == golden_lacing());
  CHECK(round_trip(golden_lacing(), json::lacing_diagram_from) == golden_lacing());
  const LacingDiagram empty{{3}, {}};
  CHECK(round_trip(empty, json::lacing_diagram_from) == empty);
  const PartialPermutation rho(3, 4, {{2, 1}, {3, 2}});
  CHECK(round_trip(rho, json::partial_permutation_from) == rho);
}

TEST_CASE("pipe dreams round trip") {
  const PipeDream D(11, golden_rc_crosses());
  CHECK(round_trip(D, json::pipe_dream_from) == D);
}

TEST_CASE("polynomials round trip with big coefficients") {
  MVPoly p = x(1) * x(1) - 3L * x(2) * y(1);
  p += MVPoly(mpz_class("123456789012345678901234567890")) * MVPoly::var(VarId::xb(2, 3));
  CHECK(round_trip(p, json::poly_from) == p);
  CHECK(round_trip(MVPoly(), json::poly_from).is_zero());
  // Integer coefficients are accepted on input.
  CHECK(json::poly_from(json::parse(R"({"terms":[{"mono":{"x1":2},"coeff":3}]})")) ==
        3L * x(1) * x(1));
}

TEST_CASE("expansions and tables round trip") {
  const SchurExpansion e{{{2, 1}, 3}, {{}, 1}};
  CHECK(round_trip(e, json::schur_expansion_from) == e);
  const QuiverCoeffs c{{{{1}, {}}, mpz_class("99999999999999999999")}, {{{}, {2}}, 2}};
  CHECK(round_trip(c, json::quiver_coeffs_from) == c);
  const CoeffTable t = json::coeff_table_from(load("typec_golden_table.json"));
  CHECK(round_trip(t, json::coeff_table_from) == t);
  CoeffTable with_zero = t;
  with_zero[SignedPermutation({1, 2, 3})] = {};
  CHECK(round_trip(with_zero, json::coeff_table_from) == with_zero);
  const QExpansion q = json::q_expansion_from(load("typec_golden.json").at("printed"));
  CHECK(round_trip(q, json::q_expansion_from) == q);
  const SplitBCD s = split_BCD(SignedPermutation({3, 1, -2}), {1, 2}, t, 'B');
  const SplitBCD back = round_trip(s, json::split_bcd_from);
  CHECK(back.letter == s.letter);
  CHECK(back.denominator_log2 == s.denominator_log2);
  CHECK(back.terms == s.terms);
}

TEST_CASE("lace arrays serialize row by row") {
  CHECK(json::to_json(lace_array(golden_ranks())).dump() ==
        R"({"n":3,"s":[[1,1,0,0],[0,1,1],[2,0],[1]]})");
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(json::parse("{\"n\":"), MalformedJson);
  CHECK_THROWS_AS(json::q_expansion_from(json::parse(R"({"terms":[{"mu":[2,2],"poly":{"terms":[]}}]})")),
                  NonStrictPartition);
  CHECK_THROWS(json::rank_conditions_from(json::parse(R"({"n":1})")));
}
