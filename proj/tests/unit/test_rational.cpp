#include <doctest.h>

#include "helpers.hpp"
#include "lctk/errors.hpp"

using namespace lctk;
using namespace lctk::test;

TEST_SUITE("rational") {
  TEST_CASE("canonical form") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(4, -2).str() == "-2");
    CHECK(Rational(0, 5).str() == "0");
  }

  TEST_CASE("parse") {
    CHECK(Q("5/1092") == Rational(5, 1092));
    CHECK(Q("-7") == Rational(-7));
    CHECK(Q("10/4").str() == "5/2");
    CHECK_THROWS_AS(Q("1/0"), ParseError);
    CHECK_THROWS_AS(Q("abc"), ParseError);
    CHECK_THROWS_AS(Q(""), ParseError);
  }

  TEST_CASE("arithmetic and order") {
    CHECK(Q("1/2") + Q("1/3") == Q("5/6"));
    CHECK(Q("1/2") * Q("2/3") == Q("1/3"));
    CHECK(Q("1/2") / Q("1/4") == Rational(2));
    CHECK(Q("2/3").inverse() == Q("3/2"));
    CHECK(Q("-2/3").abs() == Q("2/3"));
    CHECK(Q("1/3") < Q("1/2"));
    CHECK(pow(Q("2/3"), 3) == Q("8/27"));
    CHECK_THROWS_AS(Rational(0).inverse(), DomainError);
    CHECK_THROWS_AS(Q("1") / Rational(0), DomainError);
  }

  TEST_CASE("large values stay exact") {
    Rational big = pow(Rational(10), 40) + Rational(1);
    CHECK((big - pow(Rational(10), 40)) == Rational(1));
  }
}
