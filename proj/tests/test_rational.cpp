#include <doctest.h>

#include "nbts/rational.hpp"

using namespace nbts;

TEST_CASE("make_rational normalizes sign and gcd") {
  CHECK(make_rational(4, -8) == Rational(-1, 2));
  CHECK(make_rational(-3, -6) == Rational(1, 2));
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK_THROWS_AS(make_rational(1, 0), InvalidInput);
}

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("0") == Rational(0));
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational("+5/10") == Rational(1, 2));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("a/2"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1 / 2"), ParseError);
}

TEST_CASE("to_string round-trips through parse_rational") {
  for (const char* text : {"0", "1", "-1", "1/2", "-22/7", "355/113"}) {
    CHECK(to_string(parse_rational(text)) == text);
  }
}
