#include <random>

#include <gtest/gtest.h>

#include "flateta/cyclotomic.hpp"
#include "flateta/errors.hpp"
#include "flateta/rational.hpp"

using namespace flateta;

TEST(Rational, NormalizeReduces) {
    EXPECT_EQ(rational_normalize(10, 5).fraction_string(), "2/1");
    EXPECT_EQ(rational_normalize(-4, 3).fraction_string(), "-4/3");
    EXPECT_EQ(rational_normalize(6, -9).fraction_string(), "-2/3");
    EXPECT_EQ(rational_normalize(0, -7).fraction_string(), "0/1");
    EXPECT_EQ(rational_normalize(-6, -9).fraction_string(), "2/3");
}

TEST(Rational, ZeroDenominatorIsDomainError) {
    EXPECT_THROW(rational_normalize(1, 0), DomainError);
    EXPECT_THROW(Rational(1) / Rational(0), DomainError);
    EXPECT_THROW(Rational(0).reciprocal(), DomainError);
    EXPECT_THROW(Rational::parse("3/0"), DomainError);
}

TEST(Rational, Arithmetic) {
    const Rational a(3, 5);
    EXPECT_EQ(a * a, Rational(9, 25));
    EXPECT_EQ(a * a + 1, Rational(34, 25));
    EXPECT_EQ(Rational(5, 6) + Rational(1, 6), Rational(1));
    EXPECT_EQ(-Rational(3, 8) - Rational(1, 16), Rational(7, -16));
    EXPECT_EQ(Rational(1, 2) / Rational(-1, 4), Rational(-2));
    EXPECT_LT(Rational(-4, 3), Rational(-2, 3));
    EXPECT_GT(Rational(1, 3), Rational(1, 4));
}

TEST(Rational, FloorRoundsDown) {
    EXPECT_EQ(Rational(7, 3).floor(), 2);
    EXPECT_EQ(Rational(-7, 3).floor(), -3);
    EXPECT_EQ(Rational(-6, 3).floor(), -2);
    EXPECT_EQ(Rational(0).floor(), 0);
}

TEST(Rational, Rendering) {
    EXPECT_EQ(Rational(-4, 3).str(), "-4/3");
    EXPECT_EQ(Rational(2).str(), "2");
    EXPECT_EQ(Rational(2).fraction_string(), "2/1");
    EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
    EXPECT_EQ(Rational::parse("17"), Rational(17));
    EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
    EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, ArbitraryPrecision) {
    Rational big(1);
    for (int i = 0; i < 40; ++i) big *= Rational(BigInt(1000003), BigInt(999983));
    Rational back = big;
    for (int i = 0; i < 40; ++i) back /= Rational(BigInt(1000003), BigInt(999983));
    EXPECT_EQ(back, Rational(1));
    EXPECT_GT(big.numerator(), BigInt(1) << 64);
}

// Random rationals: the reduced form is canonical and survives embedding
// into any cyclotomic field and certification back out.
TEST(RationalProperty, CanonicalFormAndCyclotomicRoundTrip) {
    std::mt19937_64 rng(20261014);
    std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000000);
    std::uniform_int_distribution<std::uint64_t> order(1, 60);
    for (int i = 0; i < 100; ++i) {
        const Rational r(num(rng), den(rng));
        EXPECT_EQ(gcd(abs(r.numerator()), r.denominator()), 1);
        EXPECT_GE(r.denominator(), 1);
        EXPECT_EQ(Rational::parse(r.fraction_string()), r);
        const auto c = CyclotomicElement::constant(r, order(rng));
        EXPECT_EQ(to_rational(c), r);
        EXPECT_EQ(to_rational(c.promote(c.order() * 6)), r);
    }
}
