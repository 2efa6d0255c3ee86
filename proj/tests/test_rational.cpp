#include <doctest.h>

#include "bethesym/rational.hpp"

using namespace bethesym;

TEST_CASE("rational canonical form") {
    Rational r(6, -4);
    CHECK(r == Rational(-3, 2));
    CHECK(r.denominator() == 2);
    CHECK(r.numerator() == -3);
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(0).str() == "0");
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational(8, 4).str() == "2");
}

TEST_CASE("rational arithmetic and errors") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK_THROWS_AS(a / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK(a.pow(-2) == Rational(4));
    CHECK_THROWS_AS(Rational(0).pow(-1), DivisionByZero);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("x"), Error);
    CHECK_THROWS_AS(Rational::parse("1.5"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
}

TEST_CASE("rational gcd") {
    CHECK(Rational::gcd(Rational(4, 3), Rational(2, 9)) == Rational(2, 9));
    CHECK(Rational::gcd(Rational(0), Rational(-5, 2)) == Rational(5, 2));
    CHECK(Rational::gcd(Rational(6), Rational(4)) == Rational(2));
}
