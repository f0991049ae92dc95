#include "witt/rational.hpp"

#include "witt/errors.hpp"

#include <doctest.h>

using namespace witt;

TEST_CASE("rationals stay in lowest terms with unique zero") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, -4).str() == "1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
    CHECK((Rational(1, 2) - Rational(1, 2)).is_zero());
    CHECK(Rational(3).str() == "3");
}

TEST_CASE("rational parsing round-trips and rejects junk") {
    for (const char* s : {"0", "5", "-7", "2/3", "-9/4"}) {
        CHECK(Rational::parse(s).str() == s);
    }
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    CHECK(Rational::parse("+3") == Rational(3));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("a"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
}

TEST_CASE("rational arithmetic and comparisons are exact") {
    Rational big = Rational(1);
    for (int i = 0; i < 40; ++i) big *= Rational(10); // 10^40, exceeds any machine word
    CHECK((big / big) == Rational(1));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), PreconditionError);
    CHECK(Rational::binomial(16, 8) == Rational(12870));
    CHECK(Rational::binomial(5, 0) == Rational(1));
}
