#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <symineq/vecnorm.hpp>

#include "support/generators.hpp"

using namespace symineq;

TEST(LpMean, ArithmeticHarmonicGeometric) {
    EXPECT_DOUBLE_EQ(lp_mean(RationalVector{1, 2, 3}, 1.0), 2.0);
    EXPECT_DOUBLE_EQ(lp_mean(RationalVector{2, 8}, -1.0), 3.2);
    EXPECT_DOUBLE_EQ(lp_mean(RationalVector{4, 9}, 0.0), 6.0);
}

TEST(LpMean, NegativeExponentWithZeroEntryIsZero) {
    EXPECT_EQ(lp_mean(RationalVector{0, 2}, -1.0), 0.0);
    EXPECT_EQ(lp_mean(RationalVector{0, 2}, -0.5), 0.0);
    EXPECT_EQ(lp_mean(RationalVector{0, 2}, PExponent::minus_infinity()), 0.0);
}

TEST(LpMean, GeometricMeanWithZeroIsExactlyZero) { EXPECT_EQ(lp_mean(RationalVector{0, 5, 7}, 0.0), 0.0); }

TEST(LpMean, Infinities) {
    const RationalVector x{Rational(1, 3), 5, 2};
    EXPECT_DOUBLE_EQ(lp_mean(x, PExponent::plus_infinity()), 5.0);
    EXPECT_DOUBLE_EQ(lp_mean(x, PExponent::minus_infinity()), 1.0 / 3.0);
    EXPECT_EQ(PExponent(INFINITY).kind(), PExponent::Kind::plus_infinity);
}

TEST(LpMean, MeanConventionIncludesOneOverN) {
    // sum convention would give (1 + 1)^(1/2) = sqrt 2
    EXPECT_DOUBLE_EQ(lp_mean(RationalVector{1, 1}, 2.0), 1.0);
}

TEST(LpMean, MonotoneInP) {
    std::mt19937_64 rng(testgen::kDefaultSeed);
    for (int trial = 0; trial < 200; ++trial) {
        const auto x = testgen::random_vector(rng, testgen::random_size(rng, 1, 6));
        double previous = lp_mean(x, PExponent::minus_infinity());
        for (double p = -4.0; p <= 4.0 + 1e-12; p += 0.25) {
            const double current = lp_mean(x, p);
            EXPECT_GE(current, previous - 1e-12 * std::max(1.0, previous)) << "p = " << p;
            previous = current;
        }
        EXPECT_LE(previous, lp_mean(x, PExponent::plus_infinity()) * (1 + 1e-12));
    }
}

TEST(LpMean, PositivelyHomogeneous) {
    std::mt19937_64 rng(testgen::kDefaultSeed + 1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = testgen::random_vector(rng, testgen::random_size(rng, 1, 5));
        const Rational c = testgen::random_rational(rng, 5, 7) + Rational(1, 7);
        for (double p : {-3.0, -1.0, 0.0, 0.5, 1.0, 2.5, double(INFINITY), -double(INFINITY)}) {
            const double lhs = lp_mean(x.scaled(c), p);
            const double rhs = c.get_d() * lp_mean(x, p);
            EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, rhs)) << "p = " << p;
        }
    }
}

TEST(LpMean, ContinuousAtZero) {
    // The gap to the geometric mean is first order in p:
    //   M_p - M_0 ≈ M_0 * p * Var(log x) / 2.
    std::mt19937_64 rng(testgen::kDefaultSeed + 2);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> v;
        const auto n = testgen::random_size(rng, 1, 5);
        for (std::size_t i = 0; i < n; ++i) v.push_back(testgen::random_rational(rng, 10, 4) + Rational(1, 4));
        const RationalVector x(std::move(v));
        const double g = lp_mean(x, 0.0);
        double mean = 0, var = 0;
        for (const auto& e : x) mean += std::log(e.get_d());
        mean /= static_cast<double>(n);
        for (const auto& e : x) var += std::pow(std::log(e.get_d()) - mean, 2);
        var /= static_cast<double>(n);
        double last_gap = INFINITY;
        for (double p : {1e-2, 1e-3, 1e-4}) {
            for (double signed_p : {p, -p}) {
                const double gap = std::abs(lp_mean(x, signed_p) - g);
                EXPECT_LE(gap, g * (p * var + 1e-9)) << "p = " << signed_p;
            }
            const double gap = std::abs(lp_mean(x, p) - g);
            EXPECT_LE(gap, last_gap + 1e-12);
            last_gap = gap;
        }
    }
}

TEST(PartialSums, DescendingPrefixSums) {
    EXPECT_EQ(partial_sums_desc(RationalVector{3, 1}), (std::vector<Rational>{3, 4}));
    EXPECT_EQ(partial_sums_desc(RationalVector{1, 3}), (std::vector<Rational>{3, 4}));
    EXPECT_EQ(partial_sums_desc(RationalVector{4, 2, 1, 2}), (std::vector<Rational>{4, 6, 8, 9}));
}

TEST(PartialSums, PermutationInvariantAndNondecreasing) {
    std::mt19937_64 rng(testgen::kDefaultSeed + 3);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = testgen::random_vector(rng, testgen::random_size(rng, 1, 7));
        const auto s = partial_sums_desc(x);
        EXPECT_EQ(s, partial_sums_desc(testgen::shuffled(rng, x)));
        for (std::size_t i = 1; i < s.size(); ++i) EXPECT_LE(s[i - 1], s[i]);
        EXPECT_EQ(s.back(), x.sum());
    }
}

TEST(RationalVector, RejectsNegativeAndEmpty) {
    EXPECT_THROW(RationalVector({Rational(1), Rational(-1)}), std::invalid_argument);
    EXPECT_THROW(RationalVector(std::vector<Rational>{}), std::invalid_argument);
}

TEST(ParseRational, ExactDecimalsAndFractions) {
    EXPECT_EQ(parse_rational("1.9"), Rational(19, 10));
    EXPECT_EQ(parse_rational("3/7"), Rational(3, 7));
    EXPECT_EQ(parse_rational(" 4 "), Rational(4));
    EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
    EXPECT_EQ(parse_rational("1.25e-3"), Rational(1, 800));
    EXPECT_EQ(parse_rational("2E2"), Rational(200));
    EXPECT_EQ(parse_rational("0.1/0.3"), Rational(1, 3));
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
    EXPECT_THROW(parse_rational("1.2.3"), std::invalid_argument);
    EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
    EXPECT_EQ(to_string(Rational(5)), "5/1");
}
