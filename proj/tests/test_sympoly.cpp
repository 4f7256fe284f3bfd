#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <symineq/sympoly.hpp>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace symineq;
using Q = Rational;

namespace {

std::vector<Rational> coeffs(std::initializer_list<Rational> c) { return c; }

}  // namespace

TEST(Elementary, Examples) {
    EXPECT_EQ(elementary_all(RationalVector{1, 2, 3}), coeffs({1, 6, 11, 6}));
    EXPECT_EQ(elementary_all(RationalVector{1, 1, 1, 1}), coeffs({1, 4, 6, 4, 1}));
}

TEST(FKr, Examples) {
    EXPECT_EQ(f_kr_all(RationalVector{1, 1}, 2), coeffs({1, 2, 2, 1, Q(1, 4)}));
    EXPECT_EQ(f_kr_oracle(RationalVector{1, 1}, 2, 3), 1);
    const Q a(5, 3);
    for (int r = 1; r <= 4; ++r)
        for (int k = 0; k <= r; ++k) EXPECT_EQ(f_kr_oracle(RationalVector{a}, r, k), pow(a, k) / Q(factorial(k)));
    EXPECT_EQ(f_kr_oracle(RationalVector{1, 2, 3}, 2, 4), f_kr_all(RationalVector{1, 2, 3}, 2)[4]);
    EXPECT_THROW(f_kr_all(RationalVector{1}, 0), std::invalid_argument);
}

TEST(FKr, OrderOneIsElementary) {
    std::mt19937_64 rng(testgen::kDefaultSeed);
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = testgen::random_vector(rng, testgen::random_size(rng, 1, 6));
        EXPECT_EQ(f_kr_all(x, 1), elementary_all(x));
    }
}

TEST(FKr, OracleEquivalence) {
    std::mt19937_64 rng(testgen::kDefaultSeed + 1);
    for (int trial = 0; trial < 120; ++trial) {
        const auto x = testgen::random_vector(rng, testgen::random_size(rng, 1, 4));
        for (int r = 1; r <= 3; ++r) {
            const auto fast = f_kr_all(x, r);
            for (int k = 0; k <= 8; ++k) {
                const Rational expected = oracles::oracle_value(oracles::Family::F, x, k, r);
                const Rational got = static_cast<std::size_t>(k) < fast.size() ? fast[k] : Rational(0);
                ASSERT_EQ(got, expected) << "k=" << k << " r=" << r;
            }
        }
    }
}

TEST(FKr, SpecialIdentities) {
    const auto small = f_special_identities(RationalVector{1, 1}, 2);
    EXPECT_TRUE(small.all());
    EXPECT_TRUE(small.r_plus_one_checked);
    // single variable, r = 1: r + 1 = 2 > n r = 1, identity skipped
    EXPECT_FALSE(f_special_identities(RationalVector{3}, 1).r_plus_one_checked);
    std::mt19937_64 rng(testgen::kDefaultSeed + 2);
    for (int trial = 0; trial < 50; ++trial) {
        const auto x = testgen::random_vector(rng, testgen::random_size(rng, 1, 5));
        for (int r = 1; r <= 4; ++r) EXPECT_TRUE(f_special_identities(x, r).all());
    }
}

TEST(Gkr, Examples) {
    EXPECT_EQ(g_kr(RationalVector{1, 1}, 2, 2), 1);
    EXPECT_EQ(g_kr(RationalVector{1, 1}, 1, 2), 0);
    EXPECT_EQ(gbar_kr(RationalVector{1, 1}, 2, 2), 1);
    const RationalVector x{1, 2, 3};
    EXPECT_EQ(g_kr(x, 3, 2), oracles::oracle_value(oracles::Family::G, x, 3, 2));
    EXPECT_EQ(gbar_kr(x, 4, 3), oracles::oracle_value(oracles::Family::Gbar, x, 4, 3));
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(gbar_kr(x, k, 1), 0);
    EXPECT_EQ(gbar_kr(x, 0, 1), 1);  // the empty product has no variables
}

TEST(Gkr, SumWithComplementIsMultinomial) {
    std::mt19937_64 rng(testgen::kDefaultSeed + 3);
    for (int trial = 0; trial < 60; ++trial) {
        const auto x = testgen::random_vector(rng, testgen::random_size(rng, 1, 5));
        const int n = static_cast<int>(x.size());
        for (int r = 1; r <= n + 1; ++r)
            for (int k = 0; k <= 6; ++k) {
                EXPECT_EQ(g_kr(x, k, r) + gbar_kr(x, k, r), pow(x.sum(), k) / Q(factorial(k)));
                EXPECT_GE(delta_gbar_kr(x, k, r), 0);
                if (k < r) EXPECT_EQ(g_kr(x, k, r), 0);
            }
    }
}

TEST(Gkr, OracleEquivalence) {
    std::mt19937_64 rng(testgen::kDefaultSeed + 4);
    for (int trial = 0; trial < 80; ++trial) {
        const auto x = testgen::random_vector(rng, testgen::random_size(rng, 1, 4));
        for (int r = 1; r <= 3; ++r)
            for (int k = 0; k <= 8; ++k) {
                ASSERT_EQ(g_kr(x, k, r), oracles::oracle_value(oracles::Family::G, x, k, r));
                ASSERT_EQ(gbar_kr(x, k, r), oracles::oracle_value(oracles::Family::Gbar, x, k, r));
            }
    }
}

TEST(Mkr, Examples) {
    EXPECT_EQ(m_kr(RationalVector{1, 2, 3}, 2, 2), 50);
    EXPECT_EQ(m_kr(RationalVector{1, 2, 3}, 2, 4), 0);
    const RationalVector x{1, 2, 3, 4};
    EXPECT_EQ(m_kr(x, 3, 2), oracles::oracle_value(oracles::Family::M, x, 3, 2));
}

TEST(Mkr, PascalIdentity) {
    std::mt19937_64 rng(testgen::kDefaultSeed + 5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto x = testgen::random_vector(rng, testgen::random_size(rng, 1, 5));
        const int n = static_cast<int>(x.size());
        for (int r = 1; r <= n; ++r)
            for (int k = 1; k <= 6; ++k) EXPECT_EQ(m_kr(x, k, r) / Q(factorial(k)), m_kr_from_gbar(x, k, r)) << "r=" << r;
    }
}

TEST(PascalBinomial, BoundaryConventions) {
    EXPECT_EQ(pascal_binomial(-1, 0), 1);
    EXPECT_EQ(pascal_binomial(3, -1), 0);
    EXPECT_EQ(pascal_binomial(2, 5), 0);
    EXPECT_EQ(pascal_binomial(5, 2), 10);
    EXPECT_THROW(pascal_binomial(-1, 1), std::logic_error);
}

TEST(HS, NamedIndexSetsReproduceFamilies) {
    std::mt19937_64 rng(testgen::kDefaultSeed + 6);
    for (int trial = 0; trial < 30; ++trial) {
        const auto x = testgen::random_vector(rng, testgen::random_size(rng, 1, 4));
        const std::size_t n = x.size();
        for (int k = 0; k <= 6; ++k) {
            EXPECT_EQ(h_s(x, IndexSet::all(n, k)), pow(x.sum(), k) / Q(factorial(k)));
            for (int r = 1; r <= 3; ++r) {
                EXPECT_EQ(h_s(x, IndexSet::max_part_at_most(n, k, r)), family_value(Family::F, x, k, r));
                EXPECT_EQ(h_s(x, IndexSet::nonzero_parts_at_least(n, k, r)), g_kr(x, k, r));
            }
        }
    }
    EXPECT_THROW(h_s(RationalVector{1, 2}, IndexSet::all(3, 2)), std::invalid_argument);
}

TEST(IndexSets, SchurConcavity) {
    for (std::size_t n = 1; n <= 4; ++n)
        for (int k = 0; k <= 6; ++k)
            for (int r = 1; r <= 3; ++r) {
                EXPECT_TRUE(is_schur_concave_index_set(IndexSet::max_part_at_most(n, k, r)).schur_concave);
                EXPECT_TRUE(is_schur_concave_index_set(IndexSet::nonzero_parts_at_least(n, k, r)).schur_concave);
            }
    const IndexSet top{2, 2, [](std::span<const int> p) { return std::find(p.begin(), p.end(), 2) != p.end(); }};
    const auto v = is_schur_concave_index_set(top);
    ASSERT_FALSE(v.schur_concave);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->second, (std::vector<int>{1, 1}));
    EXPECT_TRUE(integer_majorizes(v.witness->first, v.witness->second));
}

TEST(IntegerMajorization, Basics) {
    EXPECT_TRUE(integer_majorizes(std::vector<int>{2, 0}, std::vector<int>{1, 1}));
    EXPECT_FALSE(integer_majorizes(std::vector<int>{1, 1}, std::vector<int>{2, 0}));
    EXPECT_TRUE(integer_majorizes(std::vector<int>{0, 3, 1}, std::vector<int>{1, 3, 0}));
    EXPECT_FALSE(integer_majorizes(std::vector<int>{2, 0}, std::vector<int>{1, 0}));
}

TEST(GradFkr, Examples) {
    EXPECT_EQ(grad_f_kr(RationalVector{1, 1}, 2, 2), coeffs({2, 2}));
    EXPECT_EQ(grad_f_kr(RationalVector{1, 2, 3}, 2, 0), coeffs({0, 0, 0}));
    EXPECT_EQ(grad_f_kr(RationalVector{1, 2, 3}, 2, 1), coeffs({1, 1, 1}));
    EXPECT_EQ(grad_f_kr(RationalVector{1, 2, 3}, 1, 2), coeffs({5, 4, 3}));
    EXPECT_THROW(grad_f_kr(RationalVector{1, 2}, 1, 3), std::invalid_argument);
}

TEST(GradFkr, MatchesCentralDifferences) {
    std::mt19937_64 rng(testgen::kDefaultSeed + 7);
    const double h = 1e-4;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> v;
        const auto n = testgen::random_size(rng, 1, 4);
        for (std::size_t i = 0; i < n; ++i) v.push_back(testgen::random_rational(rng, 5, 4) + Q(1, 2));
        const RationalVector x(v);
        const int r = static_cast<int>(testgen::random_size(rng, 1, 3));
        const int k = static_cast<int>(testgen::random_size(rng, 1, n * static_cast<std::size_t>(r)));
        const auto grad = grad_f_kr(x, r, k);
        for (std::size_t i = 0; i < n; ++i) {
            auto plus = v, minus = v;
            plus[i] += Q(h);
            minus[i] -= Q(h);
            const double fd = (f_kr_all(RationalVector(plus), r)[k].get_d() - f_kr_all(RationalVector(minus), r)[k].get_d()) / (2 * h);
            const double exact = grad[i].get_d();
            EXPECT_NEAR(fd, exact, 1e-6 * std::max(1.0, std::abs(exact))) << "i=" << i << " r=" << r << " k=" << k;
        }
    }
}

TEST(Families, PermutationInvariant) {
    std::mt19937_64 rng(testgen::kDefaultSeed + 8);
    for (int trial = 0; trial < 40; ++trial) {
        const auto x = testgen::random_vector(rng, testgen::random_size(rng, 1, 5));
        const auto y = testgen::shuffled(rng, x);
        for (auto fam : {Family::E, Family::F, Family::G, Family::Gbar, Family::DeltaGbar, Family::M})
            for (int r = 1; r <= 3; ++r)
                for (int k = 0; k <= 6; ++k) EXPECT_EQ(family_value(fam, x, k, r), family_value(fam, y, k, r));
    }
}

TEST(Guards, OversizedInstancesThrow) {
    const RationalVector big(std::vector<Rational>(21, Rational(1)));
    EXPECT_THROW(gbar_kr(big, 2, 2), too_large_error);
    EXPECT_THROW(f_kr_oracle(RationalVector(std::vector<Rational>(12, Rational(1))), 2, 30), too_large_error);
    EXPECT_THROW(family_value(Family::H_S, RationalVector{1}, 1, 1), std::invalid_argument);
}
