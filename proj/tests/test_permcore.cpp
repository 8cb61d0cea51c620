#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace quiverlab;
using namespace qltest;

TEST_CASE("length pinned values") {
  CHECK(Permutation::identity(5).length() == 0);
  CHECK(Permutation({7, 10, 3, 4, 11, 1, 5, 6, 8, 2, 9}).length() == 27);
  CHECK(Permutation::longest(4).length() == 6);
}

TEST_CASE("length equals inversion count on S_6") {
  for (const auto& w : all_perms(6)) CHECK(w.length() == inversions(w.one_line()));
}

TEST_CASE("constructor rejects non-bijections") {
  CHECK_THROWS_AS(Permutation({1, 1, 2}), NotAPermutation);
  CHECK_THROWS_AS(Permutation({0, 1}), NotAPermutation);
  CHECK_THROWS_AS(Permutation({1, 4, 2}), NotAPermutation);
}

TEST_CASE("embedding of partial permutations, pinned") {
  CHECK(PartialPermutation(2, 3, {{1, 1}}).embed() == Permutation({1, 4, 2, 3, 5}));
  CHECK(PartialPermutation(3, 4, {{2, 1}, {3, 2}}).embed() == Permutation({5, 1, 2, 3, 4, 6, 7}));
  CHECK(PartialPermutation(4, 2, {{1, 1}}).embed() == Permutation({1, 3, 4, 5, 2, 6}));
  CHECK(partial_length(PartialPermutation(2, 3, {{1, 1}})) == 2);
  CHECK(partial_length(PartialPermutation(1, 1, {})) == 1);
  CHECK(partial_length(PartialPermutation(3, 3, {{1, 1}, {2, 2}, {3, 3}})) == 0);
  CHECK_THROWS_AS(PartialPermutation(2, 2, {{1, 1}, {2, 1}}), InvalidInput);
}

namespace {

std::vector<PartialPermutation> all_partial(int a, int b) {
  std::vector<PartialPermutation> out;
  std::vector<Box> ones;
  std::vector<bool> used(b + 1, false);
  std::function<void(int)> rec = [&](int row) {
    if (row > a) {
      out.emplace_back(a, b, ones);
      return;
    }
    rec(row + 1);
    for (int c = 1; c <= b; ++c) {
      if (used[c]) continue;
      used[c] = true;
      ones.push_back({row, c});
      rec(row + 1);
      ones.pop_back();
      used[c] = false;
    }
  };
  rec(1);
  return out;
}

}  // namespace

TEST_CASE("embedding is the unique minimal extension, a+b <= 5") {
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; a + b <= 5; ++b)
      for (const auto& rho : all_partial(a, b)) {
        int best = 1 << 30, count = 0;
        for (const auto& w : all_perms(a + b)) {
          bool ext = true;
          for (int i = 1; i <= a && ext; ++i)
            for (int j = 1; j <= b && ext; ++j) ext = (w(i) == j) == rho.at(i, j);
          if (!ext) continue;
          const int len = inversions(w.one_line());
          if (len < best) best = len, count = 0;
          if (len == best) ++count;
        }
        CHECK(rho.length() == best);
        CHECK(count == 1);
      }
}

TEST_CASE("diagram pinned values") {
  CHECK(diagram(Permutation::identity(4)).empty());
  const auto rho = PartialPermutation(3, 4, {{2, 1}, {3, 2}}).embed();
  CHECK(diagram(rho) == std::vector<Box>{{1, 1}, {1, 2}, {1, 3}, {1, 4}});
  // Moving the second 1 to column 4 adds the boxes (3,2), (3,3).
  const auto rho34 = PartialPermutation(3, 4, {{2, 1}, {3, 4}}).embed();
  CHECK(rho34 == Permutation({5, 1, 4, 2, 3, 6, 7}));
  CHECK(diagram(rho34) ==
        std::vector<Box>{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {3, 2}, {3, 3}});
  CHECK(diagram(Permutation::longest(3)) == std::vector<Box>{{1, 1}, {1, 2}, {2, 1}});
}

TEST_CASE("canonical reduced word") {
  const auto rho = PartialPermutation(3, 4, {{2, 1}, {3, 2}}).embed();
  CHECK(canonical_reduced_word(rho) == ReducedWord{4, 3, 2, 1});
  CHECK(canonical_reduced_word(PartialPermutation(3, 4, {{2, 1}, {3, 4}}).embed()) ==
        ReducedWord{4, 3, 2, 1, 4, 3});
  CHECK(canonical_reduced_word(Permutation::identity(3)).empty());
  for (int d = 1; d <= 5; ++d)
    for (const auto& w : all_perms(d)) {
      const auto word = canonical_reduced_word(w);
      CHECK(static_cast<int>(word.size()) == inversions(w.one_line()));
      CHECK(apply_word(word, d) == w.one_line());
    }
}

TEST_CASE("ascent structure of canonical words of embedded partial permutations") {
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (const auto& rho : all_partial(a, b)) {
        const auto u = canonical_reduced_word(rho.embed());
        int ascents = 0;
        int segment = 1;
        for (std::size_t k = 0; k < u.size(); ++k) {
          CHECK(segment <= u[k]);
          if (k + 1 < u.size() && u[k] < u[k + 1]) ++ascents, ++segment;
        }
        CHECK(ascents <= a);
      }
}

TEST_CASE("reduced words") {
  CHECK(reduced_words(Permutation({3, 1, 2})) == std::vector<ReducedWord>{{2, 1}});
  CHECK(reduced_words(Permutation({2, 1})) == std::vector<ReducedWord>{{1}});
  CHECK(reduced_words(Permutation::longest(3)) == std::vector<ReducedWord>{{1, 2, 1}, {2, 1, 2}});
  for (int d = 1; d <= 6; ++d)
    for (const auto& w : all_perms(d)) {
      if (d == 6 && w.length() > 9) continue;  // keep the sweep quick
      for (const auto& word : reduced_words(w)) {
        CHECK(static_cast<int>(word.size()) == w.length());
        CHECK(apply_word(word, d) == w.one_line());
        CHECK(is_reduced_word(word, w));
      }
    }
}

TEST_CASE("reduced word count of the longest element of S_4") {
  CHECK(reduced_words(Permutation::longest(4)).size() == 16);
}

TEST_CASE("reduced word guard") {
  Limits lim;
  lim.max_length = 5;
  CHECK_THROWS_AS(reduced_words(Permutation::longest(4), lim), GuardExceeded);
}

namespace {

// Brute force over all tuples of group elements.
std::size_t brute_factorizations(const Permutation& w,
                                 const std::vector<std::function<bool(const Permutation&)>>& slots) {
  const int d = w.size();
  const auto group = all_perms(d);
  std::size_t count = 0;
  std::function<void(std::size_t, Permutation, int)> rec = [&](std::size_t k, Permutation prod,
                                                               int len) {
    if (k == slots.size()) {
      count += prod == w && len == w.length();
      return;
    }
    for (const auto& u : group)
      if (slots[k](u) && len + u.length() <= w.length()) rec(k + 1, prod * u, len + u.length());
  };
  rec(0, Permutation::identity(d), 0);
  return count;
}

}  // namespace

TEST_CASE("factorizations with parabolic slots") {
  std::vector<std::function<bool(const Permutation&)>> slots;
  for (int i = 1; i <= 3; ++i) {
    const int k = std::min(i, 4 - i) + 1;
    slots.push_back([k](const Permutation& u) { return u.in_S(k); });
  }
  const Permutation w({3, 1, 2});
  const auto f = factorizations(w, slots);
  CHECK(f.size() == brute_factorizations(w, slots));
  CHECK(f.size() == 2);
  for (const auto& t : f) {
    CHECK(t[0] * t[1] * t[2] == w);
    CHECK(t[0].length() + t[1].length() + t[2].length() == w.length());
  }
  const auto id = factorizations(Permutation::identity(3), slots);
  REQUIRE(id.size() == 1);
  for (const auto& u : id[0]) CHECK(u.is_identity());
  for (const auto& v : all_perms(3)) CHECK(factorizations(v, slots).size() == brute_factorizations(v, slots));
}

TEST_CASE("signed factorizations into signed times unsigned") {
  const SignedPermutation w({3, 1, -2});
  std::vector<std::function<bool(const SignedPermutation&)>> slots{
      [](const SignedPermutation&) { return true; },
      [](const SignedPermutation& v) { return v.is_unsigned(); }};
  const auto f = factorizations(w, CoxeterType::B, slots);
  std::size_t brute = 0;
  for (const auto& u : all_signed(3))
    for (const auto& v : all_signed(3))
      if (v.is_unsigned() && u * v == w && u.length_B() + v.length_B() == w.length_B()) ++brute;
  CHECK(f.size() == brute);
  CHECK(f.size() == 6);
}

TEST_CASE("generator word of the signed example") {
  const ReducedWord word{1, 0, 1, 2, 1};
  CHECK(SignedPermutation::from_word(word, 3, CoxeterType::B) == SignedPermutation({3, 1, -2}));
  CHECK(SignedPermutation({3, 1, -2}).length_B() == 5);
}

TEST_CASE("compatibility with breaks") {
  const std::vector<int> b12{1, 2}, none, b2{2};
  CHECK(compatible_with(SignedPermutation({3, 1, -2}), b12));
  CHECK(compatible_with(Permutation::identity(4), none));
  CHECK_FALSE(compatible_with(Permutation({3, 1, 2}), b2));
}

TEST_CASE("signed lengths agree with generator search") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& w : all_signed(n)) {
      CHECK(w.length_B() == brute_force_length(w, CoxeterType::B));
      if (w.in_D() && n >= 2) CHECK(w.length_D() == brute_force_length(w, CoxeterType::D));
    }
}

TEST_CASE("signed reduced words multiply back") {
  for (const auto& w : all_signed(3))
    for (const auto& word : reduced_words(w, CoxeterType::B)) {
      CHECK(static_cast<int>(word.size()) == w.length_B());
      CHECK(SignedPermutation::from_word(word, 3, CoxeterType::B) == w);
    }
}

TEST_CASE("D_n membership") {
  CHECK(SignedPermutation({-1, -2, 3}).in_D());
  CHECK_FALSE(SignedPermutation({-1, 2, 3}).in_D());
}
