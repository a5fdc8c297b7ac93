#include "detcond/error.hpp"
#include "detcond/random.hpp"
#include "detcond/scalar.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <limits>

using namespace detcond;

namespace {

constexpr int kIterations = 1000;

Integer random_integer(SplitMix64& rng) {
    // Products of three draws reach past 64 bits.
    mpz_class v = rng.uniform(-1'000'000'000, 1'000'000'000);
    v *= rng.uniform(-1'000'000'000, 1'000'000'000);
    v *= rng.uniform(1, 1'000'000'000);
    return Integer(v);
}

}  // namespace

TEST(ParseScalar, RationalIsReduced) {
    const auto x = parse_scalar<Rational>("3/6");
    EXPECT_EQ(x, Rational(1, 2));
    EXPECT_EQ(to_text(x), "1/2");
    EXPECT_EQ(to_text(parse_scalar<Rational>("4/-8")), "-1/2");
    EXPECT_EQ(to_text(parse_scalar<Rational>("-12/4")), "-3");
}

TEST(ParseScalar, RationalAcceptsDecimals) {
    EXPECT_EQ(parse_scalar<Rational>("0.5"), Rational(1, 2));
    EXPECT_EQ(parse_scalar<Rational>("-1.25e1"), Rational(-25, 2));
    EXPECT_EQ(parse_scalar<Rational>("3e2"), Rational(300));
    EXPECT_EQ(parse_scalar<Rational>(".75"), Rational(3, 4));
}

TEST(ParseScalar, Integer) {
    EXPECT_EQ(parse_scalar<Integer>("-7"), Integer(-7));
    EXPECT_EQ(parse_scalar<Integer>("+12"), Integer(12));
    EXPECT_EQ(to_text(parse_scalar<Integer>("123456789012345678901234567890")), "123456789012345678901234567890");
}

TEST(ParseScalar, Float) {
    EXPECT_EQ(parse_scalar<Float>("0.5").value(), 0.5);
    EXPECT_EQ(parse_scalar<Float>("1/2").value(), 0.5);
    EXPECT_EQ(parse_scalar<Float>("-2.5e-3").value(), -2.5e-3);
    EXPECT_EQ(parse_scalar<Float>("sqrt(3)").value(), std::sqrt(3.0));
}

TEST(ParseScalar, Errors) {
    EXPECT_THROW(parse_scalar<Rational>("1/0"), ParseError);
    EXPECT_THROW(parse_scalar<Rational>("abc"), ParseError);
    EXPECT_THROW(parse_scalar<Rational>("1/2/3"), ParseError);
    EXPECT_THROW(parse_scalar<Rational>(""), ParseError);
    EXPECT_THROW(parse_scalar<Integer>("1/2"), ParseError);
    EXPECT_THROW(parse_scalar<Integer>("1.5"), ParseError);
    EXPECT_THROW(parse_scalar<Integer>("--1"), ParseError);
    EXPECT_THROW(parse_scalar<Float>("1.5x"), ParseError);
    EXPECT_THROW(parse_scalar<Float>("sqrt(-1)"), ParseError);
    EXPECT_THROW(parse_scalar<Float>("1/0"), ParseError);
}

TEST(ParseScalar, KindNames) {
    EXPECT_EQ(parse_scalar_kind("rational"), ScalarKind::rational);
    EXPECT_EQ(parse_scalar_kind("integer"), ScalarKind::integer);
    EXPECT_EQ(parse_scalar_kind("float"), ScalarKind::floating);
    EXPECT_THROW(parse_scalar_kind("complex"), std::invalid_argument);
}

TEST(BitLength, SmallValues) {
    EXPECT_EQ(bit_length(Integer(0)), 0u);
    EXPECT_EQ(bit_length(Integer(1)), 1u);
    EXPECT_EQ(bit_length(Integer(-255)), 8u);
    EXPECT_EQ(bit_length(Integer(256)), 9u);
}

TEST(Scalars, ZeroAndOne) {
    EXPECT_TRUE(Rational::zero().is_zero());
    EXPECT_FALSE(Rational::one().is_zero());
    EXPECT_TRUE(Integer::zero().is_zero());
    EXPECT_FALSE(Integer::one().is_zero());
    EXPECT_TRUE(Float::zero().is_zero());
    EXPECT_FALSE(Float::one().is_zero());
    // No epsilon in the zero test.
    EXPECT_FALSE(Float(std::numeric_limits<double>::denorm_min()).is_zero());
}

TEST(Scalars, IntegerExactDivide) {
    EXPECT_EQ(exact_div(Integer(12), Integer(-4)), Integer(-3));
    EXPECT_THROW(exact_div(Integer(7), Integer(2)), InexactDivision);
    EXPECT_THROW(exact_div(Integer(7), Integer(0)), std::domain_error);
    EXPECT_THROW(exact_div(Rational(7), Rational(0)), std::domain_error);
}

TEST(Scalars, CompareMagnitude) {
    EXPECT_EQ(compare_magnitude(Rational(-5), Rational(2)), 1);
    EXPECT_EQ(compare_magnitude(Rational(1, 3), Rational(-1, 3)), 0);
    EXPECT_EQ(compare_magnitude(Integer(-1), Integer(2)), -1);
    EXPECT_EQ(compare_magnitude(Float(-0.5), Float(0.25)), 1);
}

TEST(ScalarProperties, RationalRingLaws) {
    SplitMix64 rng(1);
    for (int t = 0; t < kIterations; ++t) {
        const auto a = test_support::random_nonzero_rational(rng, 1000);
        const auto b = test_support::random_nonzero_rational(rng, 1000);
        const auto c = test_support::random_nonzero_rational(rng, 1000);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(exact_div(a * b, b), a);
        // Canonical form after every operation.
        const auto s = a * b - c;
        ASSERT_GT(s.denominator(), 0);
        ASSERT_EQ(gcd(s.numerator(), s.denominator()), 1);
    }
}

TEST(ScalarProperties, IntegerRingLaws) {
    SplitMix64 rng(2);
    for (int t = 0; t < kIterations; ++t) {
        const auto a = random_integer(rng);
        const auto b = random_integer(rng);
        const auto c = random_integer(rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        if (!b.is_zero()) {
            ASSERT_EQ(exact_div(a * b, b), a);
        }
    }
}

TEST(ScalarProperties, FloatIdentityLaws) {
    SplitMix64 rng(3);
    for (int t = 0; t < kIterations; ++t) {
        const Float x(std::bit_cast<double>(rng.next() & 0x7FEF'FFFF'FFFF'FFFFULL));
        ASSERT_EQ(x + Float::zero(), x);
        ASSERT_EQ(x * Float::one(), x);
    }
}

TEST(ScalarProperties, TextRoundTrip) {
    SplitMix64 rng(4);
    for (int t = 0; t < kIterations; ++t) {
        const auto q = test_support::random_nonzero_rational(rng, 1'000'000);
        ASSERT_EQ(Rational::parse(to_text(q)), q);
        const auto z = random_integer(rng);
        ASSERT_EQ(Integer::parse(to_text(z)), z);
        const double d = std::bit_cast<double>(rng.next() & 0xFFEF'FFFF'FFFF'FFFFULL);
        ASSERT_EQ(std::bit_cast<std::uint64_t>(Float::parse(to_text(Float(d))).value()), std::bit_cast<std::uint64_t>(d))
            << to_text(Float(d));
    }
}
