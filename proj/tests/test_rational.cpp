#include <doctest.h>

#include "lmv/errors.hpp"
#include "lmv/rational.hpp"

using lmv::Rational;

TEST_CASE("canonical form on construction") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).denominator() == 1);
    CHECK(Rational(-3, 6).denominator() == 2);
    CHECK(Rational(-3, 6).numerator() == -1);
    CHECK_THROWS_AS(Rational(1, 0), lmv::InputError);
}

TEST_CASE("exact arithmetic") {
    const Rational a(1, 3), b(2, 5);
    CHECK((a + b) == Rational(11, 15));
    CHECK((a * b) == Rational(2, 15));
    CHECK((a - b) == Rational(-1, 15));
    CHECK((a / b) == Rational(5, 6));
    CHECK_THROWS_AS(a / Rational(0), lmv::InputError);
    CHECK(Rational(-7, 2).abs() == Rational(7, 2));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
}

TEST_CASE("string round trip") {
    CHECK(Rational(22, 7).str() == "22/7");
    CHECK(Rational(-22, 7).str() == "-22/7");
    CHECK(Rational(9).str() == "9");
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-6/4") == Rational(-3, 2));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK_THROWS_AS(Rational::parse("1/0"), lmv::InputError);
    CHECK_THROWS_AS(Rational::parse("zzz"), lmv::InputError);
}

TEST_CASE("ordering") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 3) > Rational(2));
}
