#include <doctest.h>

#include "helpers.hpp"

using namespace quiverlab;
using namespace qltest;

TEST_CASE("variable names round trip and order") {
  for (const char* name : {"x3", "x0_2", "y1_4", "z2", "y7"})
    CHECK(VarId::parse(name).name() == name);
  CHECK(VarId::x(1) < VarId::x(2));
  CHECK(VarId::x(9) < VarId::y(1));
  CHECK(VarId::x(9) < VarId::xb(0, 1));
  CHECK_THROWS_AS(VarId::parse("q1"), InvalidInput);
}

TEST_CASE("basic arithmetic") {
  const MVPoly X = x(1), Y = y(1);
  CHECK((X - Y) * (X + Y) == X * X - Y * Y);
  CHECK(X + MVPoly() == X);
  CHECK((X - X).is_zero());
  CHECK((X + 2L).pow(3) == X * X * X + 6L * X * X + 12L * X + 8L);
  const MVPoly w0 = (x(1) - y(1)) * (x(1) - y(2)) * (x(2) - y(1));
  CHECK(w0 == schubert_double(Permutation::longest(3)));
  CHECK(w0.is_homogeneous());
  CHECK(w0.degree() == 3);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(12345);
  for (int t = 0; t < 60; ++t) {
    const MVPoly a = random_poly(rng, 3, 4, 2), b = random_poly(rng, 3, 4, 2),
                 c = random_poly(rng, 3, 4, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a - a == MVPoly());
    // Evaluation is a ring homomorphism.
    const std::map<VarId, long> at{{VarId::x(1), 2}, {VarId::x(2), -3}, {VarId::x(3), 5}};
    CHECK(evaluate(a * b, at) == evaluate(a, at) * evaluate(b, at));
  }
}

TEST_CASE("divided differences") {
  CHECK(divided_difference(x(1), 1) == MVPoly(1L));
  CHECK(divided_difference(x(1) * x(2), 1).is_zero());
  const MVPoly w0 = x(1) * x(1) * x(2);
  CHECK(divided_difference(divided_difference(w0, 2), 1) == x(1) + x(2));
  // y alphabet.
  CHECK(divided_difference(y(2), 1, Alphabet::Y) == MVPoly(-1L));
}

TEST_CASE("divided difference identities on random polynomials") {
  std::mt19937 rng(777);
  for (int t = 0; t < 40; ++t) {
    const MVPoly p = random_poly(rng, 4, 5, 3);
    for (int i = 1; i <= 3; ++i) CHECK(divided_difference(divided_difference(p, i), i).is_zero());
    for (int i = 1; i <= 2; ++i) {
      const MVPoly l = divided_difference(divided_difference(divided_difference(p, i), i + 1), i);
      const MVPoly r =
          divided_difference(divided_difference(divided_difference(p, i + 1), i), i + 1);
      CHECK(l == r);
    }
    // (p - s_1 p) = (x1 - x2) * d_1 p.
    CHECK(p - swap_variables(p, VarId::x(1), VarId::x(2)) ==
          (x(1) - x(2)) * divided_difference(p, 1));
  }
}

TEST_CASE("substitution") {
  CHECK(substitute(x(1) + x(2), {{VarId::x(1), MVPoly()}}) == x(2));
  const MVPoly p = MVPoly::var(VarId::xb(0, 1)) - MVPoly::var(VarId::yb(1, 1));
  const MVPoly q = rename(p, [](VarId v) {
    if (v.alphabet == Alphabet::Y) v.alphabet = Alphabet::X;
    return v;
  });
  CHECK(q == MVPoly::var(VarId::xb(0, 1)) - MVPoly::var(VarId::xb(1, 1)));
  // Stanley function of s_1 in two variables from the shifted Schubert polynomial.
  const MVPoly s = schubert_single(Permutation({1, 2, 4, 3}));
  CHECK(substitute(s, {{VarId::x(3), MVPoly()}}) == x(1) + x(2));
}

TEST_CASE("exact division") {
  CHECK(exact_div(x(1) * x(1) - y(1) * y(1), x(1) - y(1)) == x(1) + y(1));
  const MVPoly p = x(1) * x(2) + 3L * y(2);
  CHECK(exact_div(p, MVPoly(1L)) == p);
  CHECK_THROWS_AS(exact_div(x(1) + 1L, x(2)), NotDivisible);
  try {
    exact_div(x(1) * x(1) + x(2), x(1));
  } catch (const NotDivisible& e) {
    CHECK_FALSE(e.remainder().is_zero());
  }
}

TEST_CASE("exact division inverts multiplication") {
  std::mt19937 rng(99);
  for (int t = 0; t < 50; ++t) {
    const MVPoly q = random_poly(rng, 3, 3, 2);
    const MVPoly h = random_poly(rng, 3, 4, 2);
    if (q.is_zero()) continue;
    CHECK(exact_div(q * h, q) == h);
  }
}

TEST_CASE("ratio of Schubert polynomials for the smallest quiver") {
  // d = 2, v(r) = s_1, hom region empty: the ratio is x1 - y1 of degree 1.
  const MVPoly num = schubert_double(Permutation({2, 1}));
  const MVPoly q = exact_div(num, MVPoly(1L));
  CHECK(q.degree() == 1);
  CHECK(q == x(1) - y(1));
}

TEST_CASE("deterministic printing") {
  const MVPoly p = 3L * x(2) - y(1) * x(1) + x(1) * x(1);
  CHECK(p.to_string() == "x1^2 - x1*y1 + 3*x2");
}
