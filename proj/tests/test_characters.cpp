#include "wrhermite/characters.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace wrhermite;

namespace {

// Counts SSYT of shape lambda and content mu by trying every filling.
long kostka_by_fillings(const Partition& lambda, const Partition& mu)
{
    const int n = lambda.weight();
    const int m = static_cast<int>(mu.length());
    std::vector<std::pair<int, int>> cells;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            cells.push_back({static_cast<int>(i), j});
    std::vector<int> fill(static_cast<std::size_t>(n), 0);
    long count = 0;
    std::vector<int> digits(static_cast<std::size_t>(n), 0);
    for (;;) {
        std::vector<int> content(static_cast<std::size_t>(m), 0);
        for (int d : digits)
            ++content[static_cast<std::size_t>(d)];
        bool ok = true;
        for (int v = 0; v < m && ok; ++v)
            ok = content[static_cast<std::size_t>(v)] == mu[static_cast<std::size_t>(v)];
        std::map<std::pair<int, int>, int> at;
        for (std::size_t c = 0; c < cells.size(); ++c)
            at[cells[c]] = digits[c];
        for (auto [rc, v] : at) {
            if (!ok)
                break;
            auto right = at.find({rc.first, rc.second + 1});
            auto below = at.find({rc.first + 1, rc.second});
            if (right != at.end() && right->second < v)
                ok = false;
            if (below != at.end() && below->second <= v)
                ok = false;
        }
        count += ok;
        int pos = 0;
        while (pos < n && ++digits[static_cast<std::size_t>(pos)] == m)
            digits[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n)
            break;
    }
    return count;
}

} // namespace

TEST(Characters, Examples)
{
    EXPECT_EQ(character(Partition{4}, Partition{3, 1}), 1);
    EXPECT_EQ(character(Partition{1, 1}, Partition{2}), -1);
    EXPECT_EQ(character(Partition{2, 1}, Partition{1, 1, 1}), 2);
    EXPECT_EQ(character(Partition{2, 1}, Partition{2, 1}), 0);
    try {
        character(Partition{2, 1}, Partition{2});
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "character arguments of unequal weight");
    }
}

TEST(Characters, S4Table)
{
    // Rows (4),(3,1),(2,2),(2,1,1),(1^4); classes (1^4),(2,1,1),(2,2),(3,1),(4).
    const std::vector<Partition> classes{{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};
    const std::vector<std::vector<int>> table{
        {1, 1, 1, 1, 1}, {3, 1, -1, 0, -1}, {2, 0, 2, -1, 0}, {3, -1, -1, 0, 1}, {1, -1, 1, 1, -1}};
    const auto lambdas = partitions_of(4);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            EXPECT_EQ(character(lambdas[i], classes[j]), table[i][j]);
}

TEST(Characters, FrobeniusOracleExamples)
{
    EXPECT_EQ(character_frobenius_oracle(Partition{2}, Partition{2}), 1);
    EXPECT_EQ(character_frobenius_oracle(Partition{1, 1}, Partition{1, 1}), 1);
    EXPECT_EQ(character_frobenius_oracle(Partition{2, 1}, Partition{3}), -1);
    try {
        character_frobenius_oracle(Partition{8}, Partition{8});
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "oracle restricted to small n");
    }
}

TEST(Characters, MatchesFrobeniusOracle)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                EXPECT_EQ(character(l, mu), character_frobenius_oracle(l, mu)) << to_string(l) << to_string(mu);
}

TEST(Characters, ColumnOrthogonality)
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& mu : partitions_of(n))
            for (const auto& nu : partitions_of(n)) {
                BigInt s = 0;
                for (const auto& l : partitions_of(n))
                    s += character(l, mu) * character(l, nu);
                if (mu != nu)
                    EXPECT_EQ(s, 0);
                else
                    EXPECT_GT(s, 0);
            }
}

TEST(Characters, Burnside)
{
    for (int n = 1; n <= 10; ++n) {
        BigInt s = 0;
        for (const auto& l : partitions_of(n))
            s += dimension(l) * dimension(l);
        EXPECT_EQ(s, factorial(n)) << n;
    }
}

TEST(Characters, DimensionExamplesAndConjugate)
{
    EXPECT_EQ(dimension(Partition{5}), 1);
    EXPECT_EQ(dimension(Partition{2, 1}), 2);
    EXPECT_EQ(dimension(Partition{2, 2}), 2);
    for (int n = 1; n <= 10; ++n)
        for (const auto& l : partitions_of(n)) {
            EXPECT_EQ(dimension(l), dimension(conjugate(l)));
            EXPECT_EQ(dimension(l) * hook_product(l), factorial(n));
        }
}

TEST(Kostka, Examples)
{
    EXPECT_EQ(kostka(Partition{2, 1}, Partition{1, 1, 1}), 2);
    EXPECT_EQ(kostka(Partition{4}, Partition{2, 1, 1}), 1);
    EXPECT_EQ(kostka(Partition{1, 1}, Partition{2}), 0);
    EXPECT_EQ(kostka(Partition{3, 2}, Partition{2, 2, 1}), 2);
}

TEST(Kostka, MatchesBruteForceFillings)
{
    for (int n = 1; n <= 6; ++n)
        for (const auto& l : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                EXPECT_EQ(kostka(l, mu), kostka_by_fillings(l, mu)) << to_string(l) << to_string(mu);
}

TEST(Kostka, PositiveExactlyUnderDominance)
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& l : partitions_of(n))
            for (const auto& mu : partitions_of(n))
                EXPECT_EQ(kostka(l, mu) > 0, dominates(l, mu)) << to_string(l) << to_string(mu);
}

TEST(Kostka, StandardTableauxCount)
{
    for (int n = 1; n <= 9; ++n)
        for (const auto& l : partitions_of(n))
            EXPECT_EQ(kostka(l, cycle_type(n, 1, n)), dimension(l));
}

TEST(SqkSum, Examples)
{
    EXPECT_EQ(s_qk_sum(Partition{1, 1}, 2, 1), 2);
    EXPECT_EQ(s_qk_sum(Partition{3, 2}, 2, 0), dimension(Partition{3, 2}));
    EXPECT_EQ(s_qk_sum(Partition{3}, 3, 1), 0);
    try {
        s_qk_sum(Partition{2, 1}, 2, 2);
        FAIL();
    } catch (const std::invalid_argument& e) {
        EXPECT_STREQ(e.what(), "k exceeds ⌊n/q⌋");
    }
}

TEST(SqkSum, PieriExamples)
{
    EXPECT_EQ(s_qk_via_pieri(Partition{1, 1}, 2, 1), 2);
    EXPECT_EQ(s_qk_via_pieri(Partition{2, 1}, 2, 0), 2);
    EXPECT_EQ(s_qk_via_pieri(Partition{2, 2}, 2, 1), 2);
}

TEST(SqkSum, EqualsScaledKostka)
{
    for (int n = 1; n <= 9; ++n)
        for (const auto& l : partitions_of(n))
            for (int k = 0; 2 * k <= n; ++k)
                EXPECT_EQ(s_qk_sum(l, 2, k), ipow(2, k) * kostka(conjugate(l), cycle_type(n, 2, k)))
                    << to_string(l) << " k=" << k;
}

TEST(SqkSum, PieriRouteAgreesAndIsNonNegative)
{
    for (int q = 2; q <= 4; ++q)
        for (int n = 1; n <= 8; ++n)
            for (const auto& l : partitions_of(n))
                for (int k = 0; q * k <= n; ++k) {
                    const BigInt s = s_qk_sum(l, q, k);
                    EXPECT_EQ(s, s_qk_via_pieri(l, q, k)) << to_string(l) << " q=" << q << " k=" << k;
                    EXPECT_GE(s, 0);
                }
}

TEST(SqkSum, PowerDifferenceStepOnEmptyShape)
{
    SchurCombination one;
    one.add(Partition{}, 1);
    // p_1^2 - p_2 = 2 s_(1,1).
    const auto r = power_difference_step(one, 2, 2);
    EXPECT_EQ(r.size(), 1u);
    EXPECT_EQ(r.coefficient(Partition{1, 1}), 2);
}
