#include <doctest.h>

#include "chipfire/errors.hpp"
#include "chipfire/rational.hpp"

using namespace chipfire;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(-1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).num() == 2);
  CHECK(Rational(7, 2).den() == 2);
  CHECK_THROWS_AS(Rational(1, 0), GraphError);
}

TEST_CASE("rational parsing and formatting round-trip") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("3/2") == Rational(3, 2));
  CHECK(Rational::parse("-5/10") == Rational(-1, 2));
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(4).str() == "4");
  CHECK(Rational(-1, 3).str() == "-1/3");
  CHECK_THROWS_AS(Rational::parse(""), GraphError);
  CHECK_THROWS_AS(Rational::parse("1.5"), GraphError);
  CHECK_THROWS_AS(Rational::parse("a/b"), GraphError);
  CHECK_THROWS_AS(Rational::parse("1/"), GraphError);
}

TEST_CASE("rational arithmetic is exact") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), GraphError);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(5, 5) >= Rational(1));
}

TEST_CASE("rational overflow fails loudly") {
  Rational huge(INT64_MAX, 1);
  CHECK_THROWS_AS(huge * huge, ResourceError);
  CHECK_THROWS_AS(huge + Rational(1), ResourceError);
}

TEST_CASE("checked lcm") {
  CHECK(checked_lcm(4, 6) == 12);
  CHECK(checked_lcm(1, 7) == 7);
  CHECK_THROWS_AS(checked_lcm(0, 3), GraphError);
}
