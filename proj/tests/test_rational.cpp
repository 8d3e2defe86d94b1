#include <doctest.h>

#include <random>

#include "orbifano/rational.hpp"

using namespace orbifano;

TEST_SUITE("rational") {

TEST_CASE("construction reduces to lowest terms") {
    Rational a(Int(6), Int(4));
    CHECK(a.numerator() == 3);
    CHECK(a.denominator() == 2);

    Rational b(Int(-6), Int(4));
    CHECK(b.numerator() == -3);
    CHECK(b.denominator() == 2);

    Rational c(Int(6), Int(-4)); // sign moves to the numerator
    CHECK(c.numerator() == -3);
    CHECK(c.denominator() == 2);

    Rational zero(Int(0), Int(17));
    CHECK(zero.numerator() == 0);
    CHECK(zero.denominator() == 1);

    CHECK_THROWS_AS(Rational(Int(1), Int(0)), Error);
}

TEST_CASE("arithmetic and comparison") {
    Rational third(1, 3), half(1, 2);
    CHECK(third + half == Rational(5, 6));
    CHECK(half - third == Rational(1, 6));
    CHECK(third * half == Rational(1, 6));
    CHECK(half / third == Rational(3, 2));
    CHECK(third < half);
    CHECK(-half < third);
    CHECK(Rational(2, 4) == half);
    CHECK_THROWS_AS(half / Rational(0), Error);
}

TEST_CASE("floor") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(6, 2).floor() == 3);
    CHECK(Rational(0).floor() == 0);
    CHECK((Rational(1, 660) + Rational(3)).floor() == 3);
}

TEST_CASE("str and parse round-trip") {
    CHECK(Rational(1, 330).str() == "1/330");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational(-3, 7).str() == "-3/7");
    CHECK(Rational::parse("1/330") == Rational(1, 330));
    CHECK(Rational::parse("4") == Rational(4));
    CHECK(Rational::parse(" -3/7 ") == Rational(-3, 7));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::parse(""), Error);
    CHECK_THROWS_AS(Rational::parse("a/b"), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("1.5"), Error);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), Error);
}

TEST_CASE("sum of random rationals keeps the gcd invariant") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        Rational a(Int(num(rng)), Int(den(rng)));
        Rational b(Int(num(rng)), Int(den(rng)));
        for (Rational r : {a + b, a - b, a * b}) {
            CHECK(r.denominator() > 0);
            Int n = r.numerator() < 0 ? Int(-r.numerator()) : r.numerator();
            CHECK(boost::multiprecision::gcd(n, r.denominator()) == 1);
        }
        // exact arithmetic round trip
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("values beyond 64 bits stay exact") {
    Rational big(Int("123456789012345678901234567890"), Int(3));
    CHECK(big * Rational(3) == Rational(Int("123456789012345678901234567890")));
    CHECK(big.str() == "41152263004115226300411522630");
}

} // TEST_SUITE
