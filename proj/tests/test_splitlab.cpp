#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace quiverlab;
using namespace qltest;

namespace {

std::string one_line_string(const Permutation& u, int d) {
  std::string s;
  const Permutation full = u.resized(d);
  for (int v : full.one_line()) s += std::to_string(v);
  return s;
}

QExpansion printed_of(const json::Json& doc) { return json::q_expansion_from(doc.at("printed")); }

SignedPermutation golden_w() { return SignedPermutation({3, 1, -2}); }

}  // namespace

TEST_CASE("rank function counts points in the northwest corner") {
  for (const auto& w : all_perms(4))
    for (int p = 0; p <= 4; ++p)
      for (int q = 0; q <= 4; ++q) {
        int count = 0;
        for (int a = 1; a <= p; ++a) count += w(a) <= q;
        CHECK(rank_function(w, p, q) == count);
      }
  CHECK(rank_function(Permutation({2, 1}), -1, 2) == 0);
}

TEST_CASE("universal rank triangle, pinned") {
  const RankConditions r = fulton_ranks(Permutation({3, 1, 2}), 2);
  CHECK(r == RankConditions(3, {{1, 1, 1, 0}, {2, 1, 0}, {2, 1}, {1}}));
  CHECK_THROWS_AS(fulton_ranks(Permutation({1, 2, 4, 3}), 2), InvalidInput);
}

TEST_CASE("universal ranks are valid with codimension l(w)") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& w : all_perms(n + 1)) {
      const RankConditions r = fulton_ranks(w, n);
      CHECK_FALSE(validate(r).has_value());
      CHECK(expected_codim(r) == w.length());
      const LaceArray s = lace_array(r);
      for (int i = 0; i <= r.n(); ++i)
        for (int j = i; j <= r.n(); ++j) CHECK(s(i, j) >= 0);
    }
}

TEST_CASE("constrained factorizations match brute force, S_3 and S_4") {
  for (int n = 2; n <= 3; ++n) {
    const auto slots = fulton_slots(n);
    const auto group = all_perms(n + 1);
    for (const auto& w : group) {
      std::size_t brute = 0;
      std::function<void(std::size_t, Permutation, int)> rec = [&](std::size_t k, Permutation prod,
                                                                   int len) {
        if (k == slots.size()) {
          brute += prod == w && len == w.length();
          return;
        }
        for (const auto& u : group)
          if (slots[k](u) && len + u.length() <= w.length()) rec(k + 1, prod * u, len + u.length());
      };
      rec(0, Permutation::identity(n + 1), 0);
      CHECK(constrained_factorizations(w, n).size() == brute);
    }
  }
}

TEST_CASE("gamma images for w = [3,1,2], n = 2") {
  const Permutation w({3, 1, 2});
  const auto W = wmin(fulton_ranks(w, 2));
  CHECK(W.size() == 2);
  CHECK(constrained_factorizations(w, 2).size() == 2);
  std::set<std::string> images;
  for (const auto& Wi : W) {
    const auto us = gamma(Wi, w, 2);
    REQUIRE(us.size() == 3);
    CHECK(us[0] * us[1] * us[2] == w);
    images.insert(one_line_string(us[0], 3) + " " + one_line_string(us[1], 3) + " " +
                  one_line_string(us[2], 3));
    CHECK(gamma_inverse(us, w, 2) == Wi);
  }
  CHECK(images == std::set<std::string>{"123 132 213", "123 312 123"});
}

TEST_CASE("gamma rejects non-minimal input and gamma inverse rejects bad slots") {
  const Permutation w({3, 1, 2});
  const RankConditions r = fulton_ranks(w, 2);
  const auto all = enumerate_lacing(r, false);
  for (const auto& W : all)
    if (W.length() > expected_codim(r)) CHECK_THROWS_AS(gamma(W, w, 2), NotMinimal);
  // u_1 must lie in S_2.
  const std::vector<Permutation> bad{Permutation({1, 3, 2}), Permutation({2, 1, 3}),
                                     Permutation({1, 2, 3})};
  CHECK_THROWS_AS(gamma_inverse(bad, w, 2), ConstraintViolated);
}

TEST_CASE("bijection between minimal lacings and factorizations, all of S_3 and S_4") {
  for (int n = 2; n <= 3; ++n)
    for (const auto& w : all_perms(n + 1)) {
      const auto rep = theorem2_check(w, n);
      CHECK(rep.ok);
      CHECK(rep.bijective);
      CHECK(rep.round_trip);
      CHECK(rep.component);
      CHECK(rep.wmin_count == rep.factorization_count);
    }
}

TEST_CASE("type A splitting, pinned") {
  CHECK(split_A(Permutation({2, 1}), {1}) == SplitA{{{{1}}, 1}});
  CHECK(split_A(Permutation({1, 3, 2}), {2}) == SplitA{{{{1}}, 1}});
  CHECK(split_A(Permutation::identity(3), {1}) == SplitA{{{{}}, 1}});
  CHECK_THROWS_AS(split_A(Permutation({3, 1, 2}), {2}), NotCompatible);
  CHECK_THROWS_AS(split_A(Permutation({2, 1}), {2, 1}), InvalidInput);
}

TEST_CASE("type A splitting reassembles, all of S_4") {
  for (const auto& w : all_perms(4)) {
    std::vector<std::vector<int>> choices{w.right_descents(), {1, 2, 3}};
    if (choices[0].empty()) choices[0] = {1};
    for (const auto& breaks : choices) {
      const SplitA c = split_A(w, breaks);
      for (const auto& [lams, coeff] : c) {
        CHECK(coeff > 0);
        int total = 0;
        for (const auto& l : lams) total += size(l);
        CHECK(total == w.length());
      }
      CHECK(assemble_split_A(c, breaks) == schubert_single(w));
      const SplitA nz = nonvanishing(c, breaks);
      CHECK(assemble_split_A(nz, breaks) == schubert_single(w));
      for (const auto& [lams, coeff] : c)
        if (!nz.count(lams)) CHECK(assemble_split_A(SplitA{{lams, 1}}, breaks).is_zero());
    }
  }
}

TEST_CASE("type B, C, D splitting of s_1") {
  // C_{s_1} = Q_1(Z) + x_1.
  const SignedPermutation w({2, 1});
  QExpansion printed;
  printed[{}] = x(1);
  printed[{1}] = MVPoly(1L);
  const CoeffTable table = solve_coeff_table(w, printed, 'C');
  CHECK(table.size() == 2);
  CHECK(table.at(SignedPermutation({1, 2})).at({}) == 1);
  CHECK(table.at(SignedPermutation({2, 1})).at({1}) == 1);
  const SplitBCD s = split_BCD(w, {1}, table, 'C');
  CHECK(s.terms.size() == 2);
  CHECK(s.terms.at({Partition{}, {Partition{1}}}) == 1);
  CHECK(s.terms.at({Partition{1}, {Partition{}}}) == 1);
  CHECK(assemble_split_BCD(s, {1}) == printed);
  CoeffTable partial = table;
  partial.erase(SignedPermutation({2, 1}));
  CHECK_THROWS_AS(split_BCD(w, {1}, partial, 'C'), MissingTableEntry);
}

TEST_CASE("inconsistent printed expansions are rejected") {
  QExpansion printed;
  printed[{}] = x(2);
  CHECK_THROWS_AS(solve_coeff_table(SignedPermutation({2, 1}), printed, 'C'), InconsistentSystem);
}

TEST_CASE("type D factorizations need w in D_n") {
  CHECK_THROWS_AS(bcd_factorizations(SignedPermutation({-1, 2}), 'D'), InvalidInput);
  CHECK_NOTHROW(bcd_factorizations(SignedPermutation({-1, -2}), 'D'));
}

TEST_CASE("length-additive factorizations in B_3 keep compatibility") {
  const std::vector<int> breaks{1, 2};
  for (const auto& w : all_signed(3)) {
    if (!compatible_with(w, breaks)) continue;
    for (const auto& [u, v] : bcd_factorizations(w, 'B')) {
      CHECK(v.length() + u.length_B() == w.length_B());
      CHECK(compatible_with(v, breaks));
    }
  }
}

TEST_CASE("signed golden example: solved table and the eight regrouped terms") {
  const auto doc = load("typec_golden.json");
  const QExpansion printed = printed_of(doc);
  const CoeffTable table = solve_coeff_table(golden_w(), printed, 'C');
  CHECK(table == json::coeff_table_from(load("typec_golden_table.json")));
  CHECK(table.size() == 6);
  const std::vector<int> breaks{1, 2};
  const SplitBCD full = split_BCD(golden_w(), breaks, table, 'C');
  CHECK(full.terms.size() == 11);
  CHECK(full.denominator_log2 == 0);
  CHECK(assemble_split_BCD(full, breaks) == printed);
  const SplitBCD s = nonvanishing(full, breaks);
  using P = Partition;
  const std::map<std::pair<Partition, std::vector<Partition>>, mpz_class> expect{
      {{P{4, 1}, {P{}, P{}}}, 1}, {{P{4}, {P{1}, P{}}}, 1},    {{P{3, 1}, {P{1}, P{}}}, 1},
      {{P{3, 1}, {P{}, P{1}}}, 1}, {{P{3}, {P{2}, P{}}}, 1},   {{P{3}, {P{1}, P{1}}}, 1},
      {{P{2, 1}, {P{1}, P{1}}}, 1}, {{P{2}, {P{2}, P{1}}}, 1}};
  CHECK(s.terms == expect);
  CHECK(assemble_split_BCD(s, breaks) == printed);
}

TEST_CASE("type B carries the sign-change power of two") {
  const CoeffTable table = json::coeff_table_from(load("typec_golden_table.json"));
  const SplitBCD s = split_BCD(golden_w(), {1, 2}, table, 'B');
  CHECK(s.letter == 'B');
  CHECK(s.denominator_log2 == golden_w().sign_changes());
}
