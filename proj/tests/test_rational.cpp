#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shellfill/rational.hpp"

using namespace shellfill;

TEST_CASE("construction reduces and normalizes the sign") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6).num() == -1);
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 4) == Rational(7, 12));
    CHECK(Rational(9, 10) + Rational(1, 2) == Rational(7, 5));
    CHECK(Rational(1, 6) - Rational(1, 2) == Rational(-1, 3));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(3, 2) == Rational(1, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("floor and mod1") {
    CHECK(Rational(7, 5).floor() == 1);
    CHECK(Rational(-1, 5).floor() == -1);
    CHECK(Rational(-7, 5).floor() == -2);
    CHECK(Rational(3).floor() == 3);
    CHECK(Rational(7, 5).mod1() == Rational(2, 5));
    CHECK(Rational(-1, 5).mod1() == Rational(4, 5));
    CHECK(Rational(2).mod1() == Rational(0));
}

TEST_CASE("ordering crosses denominators") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(10, 3) > Rational(3));
}

TEST_CASE("overflow is detected, not wrapped") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, Error);
    try {
        Rational r = big * big;
        (void)r;
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Overflow);
    }
}

TEST_CASE("p/q literal round trip") {
    CHECK(Rational::parse("3/10") == Rational(3, 10));
    CHECK(Rational::parse("0/1") == Rational(0));
    CHECK(Rational(7, 12).str() == "7/12");
    CHECK_THROWS_AS(Rational::parse("3"), Error);
    CHECK_THROWS_AS(Rational::parse("3/-10"), Error);
    CHECK_THROWS_AS(Rational::parse("2/4"), Error);
    CHECK_THROWS_AS(Rational::parse("x/4"), Error);
}
