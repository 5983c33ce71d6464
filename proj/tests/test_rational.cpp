#include <doctest.h>

#include "funl/rational.hpp"

using namespace funl;

TEST_CASE("canonical reduced form") {
    CHECK(Rational(6, 8).str() == "3/4");
    CHECK(Rational(-6, 8).str() == "-3/4");
    CHECK(Rational(6, -8).str() == "-3/4");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(10, 2).str() == "5");
}

TEST_CASE("exact arithmetic") {
    Rational third(1, 3);
    CHECK((third + third + third) == Rational(1));
    CHECK((Rational(1, 2) * Rational(2, 3)).str() == "1/3");
    CHECK((Rational(7, 2) - Rational(1, 2)) == Rational(3));
    CHECK((Rational(1, 7) / Rational(2, 7)).str() == "1/2");
    CHECK((-Rational(1, 2)).str() == "-1/2");
    CHECK(Rational(1, 2) < Rational(2, 3));
}

TEST_CASE("parse accepts p and p/q, rejects junk") {
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("-3/9").str() == "-1/3");
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1 2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
    CHECK_THROWS_AS(Rational(0).inverse(), Error);
}

TEST_CASE("big values stay exact") {
    Rational x(1);
    for (int i = 0; i < 64; ++i) x *= Rational(3, 2);
    Rational y(1);
    for (int i = 0; i < 64; ++i) y /= Rational(3, 2);
    CHECK((x * y) == Rational(1));
}
