#include <random>

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"

using oracles::CompositionStream;
using oracles::Constraint;
using Tuples = std::vector<std::vector<int>>;

namespace {

long choose(long a, long b) {
    long out = 1;
    for (long i = 1; i <= b; ++i) out = out * (a - b + i) / i;
    return out;
}

// [t^k] (1 + t + ... + t^r)^n by repeated convolution.
long truncated_geometric(int n, int k, int r) {
    std::vector<long> c(static_cast<std::size_t>(k) + 1, 0);
    c[0] = 1;
    for (int i = 0; i < n; ++i) {
        std::vector<long> next(c.size(), 0);
        for (std::size_t a = 0; a < c.size(); ++a)
            for (int b = 0; b <= r && a + static_cast<std::size_t>(b) < c.size(); ++b) next[a + static_cast<std::size_t>(b)] += c[a];
        c = next;
    }
    return c[static_cast<std::size_t>(k)];
}

}  // namespace

TEST(CompositionStream, Examples) {
    EXPECT_EQ(CompositionStream(2, 2).all(), (Tuples{{0, 2}, {1, 1}, {2, 0}}));
    EXPECT_EQ(CompositionStream(2, 2, Constraint::max_part_at_most, 1).all(), (Tuples{{1, 1}}));
    EXPECT_EQ(CompositionStream(3, 3, Constraint::nonzero_parts_at_least, 3).all(), (Tuples{{1, 1, 1}}));
    EXPECT_EQ(CompositionStream(1, 4).all(), (Tuples{{4}}));
    EXPECT_EQ(CompositionStream(3, 0).all(), (Tuples{{0, 0, 0}}));
}

TEST(CompositionStream, LexicographicAndDuplicateFree) {
    for (std::size_t n = 1; n <= 5; ++n)
        for (int k = 0; k <= 6; ++k) {
            const auto all = CompositionStream(n, k).all();
            for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1], all[i]);
            for (const auto& p : all) {
                int s = 0;
                for (int v : p) {
                    EXPECT_GE(v, 0);
                    s += v;
                }
                EXPECT_EQ(s, k);
            }
        }
}

TEST(CompositionStream, Cardinalities) {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= 6; ++k) {
            const auto un = static_cast<std::size_t>(n);
            EXPECT_EQ(static_cast<long>(CompositionStream(un, k).all().size()), choose(n + k - 1, k));
            for (int r = 0; r <= 6; ++r)
                EXPECT_EQ(static_cast<long>(CompositionStream(un, k, Constraint::max_part_at_most, r).all().size()),
                          truncated_geometric(n, k, r))
                    << "n=" << n << " k=" << k << " r=" << r;
        }
}

TEST(CompositionStream, ConstraintsPartition) {
    // "at least r nonzero" and "fewer than r distinct" split I_k.
    for (std::size_t n = 1; n <= 4; ++n)
        for (int k = 0; k <= 6; ++k)
            for (int r = 1; r <= 5; ++r)
                EXPECT_EQ(CompositionStream(n, k, Constraint::nonzero_parts_at_least, r).all().size() +
                              CompositionStream(n, k, Constraint::distinct_vars_below, r).all().size(),
                          CompositionStream(n, k).all().size());
}

TEST(CompositionStream, GuardRejectsLargeInstances) {
    EXPECT_THROW(CompositionStream(10, 30), oracles::too_large);
    EXPECT_THROW(CompositionStream(0, 1), std::invalid_argument);
}

TEST(OracleValue, Examples) {
    using oracles::Family;
    using symineq::RationalVector;
    EXPECT_EQ(oracles::oracle_value(Family::F, RationalVector{1, 1}, 3, 2), 1);
    EXPECT_EQ(oracles::oracle_value(Family::G, RationalVector{1, 1}, 2, 2), 1);
    EXPECT_EQ(oracles::oracle_value(Family::M, RationalVector{1, 2, 3}, 2, 2), 50);
    EXPECT_EQ(oracles::oracle_value(Family::E, RationalVector{1, 2, 3}, 2, 1), 11);
    EXPECT_EQ(oracles::oracle_value(Family::Gbar, RationalVector{1, 1}, 2, 2), 1);
}
