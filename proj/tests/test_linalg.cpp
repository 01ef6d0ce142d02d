#include <doctest.h>

#include "nbts/linalg.hpp"

using namespace nbts;

TEST_CASE("rank of small matrices") {
  CHECK(rank({}) == 0);
  CHECK(rank({{Rational(0), Rational(0)}}) == 0);
  CHECK(rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
  CHECK(rank({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}) == 2);
}

TEST_CASE("nullspace spans the kernel") {
  // x + y + z = 0 has a two-dimensional kernel.
  Mat m = {{Rational(1), Rational(1), Rational(1)}};
  Mat basis = nullspace(m, 3);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    CHECK(dot(m[0], v) == 0);
  }
}

TEST_CASE("solve_linear finds exact solutions and detects inconsistency") {
  Mat a = {{Rational(2), Rational(1)}, {Rational(1), Rational(-1)}};
  auto x = solve_linear(a, {Rational(5), Rational(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rational(2));
  CHECK((*x)[1] == Rational(1));

  Mat inconsistent = {{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
  CHECK_FALSE(solve_linear(inconsistent, {Rational(1), Rational(2)}).has_value());
}

TEST_CASE("scale_to_coprime_integers") {
  Vec v = {Rational(1, 2), Rational(-3, 4), Rational(0)};
  scale_to_coprime_integers(v);
  CHECK(v == Vec{Rational(2), Rational(-3), Rational(0)});

  Vec w = {Rational(4), Rational(-6)};
  scale_to_coprime_integers(w);
  CHECK(w == Vec{Rational(2), Rational(-3)});

  Vec zero = {Rational(0), Rational(0)};
  scale_to_coprime_integers(zero);
  CHECK(zero == Vec{Rational(0), Rational(0)});
}
