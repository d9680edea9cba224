#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "liecomb/rational.hpp"

using liecomb::Rational;

TEST_CASE("construction is canonical") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational("3/6").str() == "1/2");
    CHECK(Rational("-4/2").str() == "-2");
    CHECK(Rational("5").str() == "5");
}

TEST_CASE("arithmetic") {
    const Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(-a == Rational(-1, 2));
    CHECK(a < Rational(2, 3));
    CHECK(Rational(-1) < Rational(0));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2).to_long(), std::domain_error);
}

TEST_CASE("integer access") {
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).to_long() == 2);
    CHECK(Rational(-7).to_long() == -7);
    CHECK(Rational(3, 2).numerator() == 3);
    CHECK(Rational(3, 2).denominator() == 2);
    CHECK(abs(Rational(-3, 2)) == Rational(3, 2));
    CHECK(Rational(-5, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("string round trip") {
    for (long n = -20; n <= 20; ++n)
        for (long d = 1; d <= 12; ++d) {
            const Rational r(n, d);
            CHECK(Rational(r.str()) == r);
        }
}
