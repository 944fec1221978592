#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace positroid;

namespace {

BasisCollection bases(int n, int k, std::vector<std::vector<int>> lists)
{
    std::vector<KSubset> v;
    for (const auto& l : lists) v.emplace_back(n, l);
    return BasisCollection(n, k, v);
}

} // namespace

TEST(CyclicOrder, Rank)
{
    EXPECT_EQ(cyclic_rank(4, CyclicOrder(4, 5)), 0);
    EXPECT_EQ(cyclic_rank(1, CyclicOrder(4, 5)), 2);
    EXPECT_EQ(cyclic_rank(3, CyclicOrder(4, 5)), 4);
    EXPECT_THROW(cyclic_rank(6, CyclicOrder(4, 5)), input_error);
    EXPECT_THROW(CyclicOrder(0, 5), input_error);
}

TEST(CyclicOrder, Sort)
{
    EXPECT_EQ(sort_cyclic(KSubset(5, {2, 4, 5}), CyclicOrder(4, 5)), (std::vector<int>{4, 5, 2}));
    EXPECT_EQ(sort_cyclic(KSubset(5, {1, 2, 4}), CyclicOrder(1, 5)), (std::vector<int>{1, 2, 4}));
    EXPECT_EQ(sort_cyclic(KSubset(4, {1, 3}), CyclicOrder(3, 4)), (std::vector<int>{3, 1}));
}

TEST(KSubset, Construction)
{
    KSubset s(6, {5, 1, 3});
    EXPECT_EQ(s.elements(), (std::vector<int>{1, 3, 5}));
    EXPECT_EQ(s.size(), 3);
    EXPECT_EQ(s.to_string(), "{1,3,5}");
    EXPECT_THROW(KSubset(4, {1, 1}), input_error);
    EXPECT_THROW(KSubset(4, {0}), input_error);
    EXPECT_THROW(KSubset(4, {5}), input_error);
    EXPECT_THROW(KSubset(65, {1}), input_error);
    EXPECT_NO_THROW(KSubset(64, {64}));
}

TEST(Gale, Examples)
{
    EXPECT_TRUE(gale_leq(KSubset(5, {1, 2, 4}), KSubset(5, {1, 2, 4}), CyclicOrder(3, 5)));
    EXPECT_TRUE(gale_leq(KSubset(5, {1, 2, 4}), KSubset(5, {1, 3, 5}), CyclicOrder(1, 5)));
    EXPECT_TRUE(gale_leq(KSubset(5, {2, 4, 5}), KSubset(5, {1, 2, 4}), CyclicOrder(2, 5)));
    EXPECT_THROW(gale_leq(KSubset(5, {1, 2}), KSubset(5, {1, 2, 3}), CyclicOrder(1, 5)), input_error);
    EXPECT_THROW(gale_leq(KSubset(5, {1, 2}), KSubset(6, {1, 2}), CyclicOrder(1, 5)), input_error);
}

TEST(Gale, MatchesOracleAndIsPartialOrder)
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            std::vector<KSubset> all;
            oracle::subsets(n, k, [&](const oracle::Set& s) { all.emplace_back(n, s); });
            for (int t = 1; t <= n; ++t) {
                CyclicOrder o(t, n);
                for (const auto& a : all) {
                    EXPECT_TRUE(gale_leq(a, a, o));
                    for (const auto& b : all) {
                        const bool ab = gale_leq(a, b, o);
                        ASSERT_EQ(ab, oracle::gale(a.elements(), b.elements(), t, n));
                        if (ab && gale_leq(b, a, o)) ASSERT_EQ(a, b);
                    }
                }
            }
        }
}

TEST(Gale, Transitive)
{
    const int n = 6, k = 3;
    std::vector<KSubset> all;
    oracle::subsets(n, k, [&](const oracle::Set& s) { all.emplace_back(n, s); });
    for (int t = 1; t <= n; ++t) {
        CyclicOrder o(t, n);
        for (const auto& a : all)
            for (const auto& b : all)
                if (gale_leq(a, b, o))
                    for (const auto& c : all)
                        if (gale_leq(b, c, o)) ASSERT_TRUE(gale_leq(a, c, o));
    }
}

TEST(Lex, RefinesGale)
{
    const int n = 6, k = 3;
    std::vector<KSubset> all;
    oracle::subsets(n, k, [&](const oracle::Set& s) { all.emplace_back(n, s); });
    for (int t = 1; t <= n; ++t) {
        CyclicOrder o(t, n);
        for (const auto& a : all)
            for (const auto& b : all) {
                if (a != b && gale_leq(a, b, o)) EXPECT_TRUE(lex_less(a, b, o));
                EXPECT_NE(lex_less(a, b, o) || a == b, lex_less(b, a, o));
            }
    }
}

TEST(Enumeration, Binomial)
{
    EXPECT_EQ(binomial(16, 8), 12870u);
    EXPECT_EQ(binomial(5, 0), 1u);
    EXPECT_EQ(binomial(5, 6), 0u);
    std::uint64_t count = 0;
    for_each_k_mask(10, 4, [&](std::uint64_t m) {
        EXPECT_EQ(std::popcount(m), 4);
        ++count;
    });
    EXPECT_EQ(count, 210u);
    EXPECT_THROW(for_each_k_mask(64, 32, [](std::uint64_t) {}), resource_error);
}

TEST(Schubert, Examples)
{
    EXPECT_EQ(shifted_schubert(KSubset(3, {1, 2}), CyclicOrder(1, 3)), BasisCollection::uniform(3, 2));
    EXPECT_EQ(shifted_schubert(KSubset(3, {2, 3}), CyclicOrder(1, 3)), bases(3, 2, {{2, 3}}));
    EXPECT_EQ(shifted_schubert(KSubset(3, {1, 3}), CyclicOrder(2, 3)), bases(3, 2, {{1, 3}}));
    EXPECT_EQ(dual_shifted_schubert(KSubset(3, {2, 3}), CyclicOrder(1, 3)), BasisCollection::uniform(3, 2));
    EXPECT_EQ(dual_shifted_schubert(KSubset(3, {1, 2}), CyclicOrder(1, 3)), bases(3, 2, {{1, 2}}));
    EXPECT_EQ(dual_shifted_schubert(KSubset(4, {1, 3}), CyclicOrder(1, 4)), bases(4, 2, {{1, 2}, {1, 3}}));
}

TEST(Schubert, MatchesOracleAndAreMatroids)
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            oracle::subsets(n, k, [&](const oracle::Set& s) {
                for (int t = 1; t <= n; ++t) {
                    auto sm = shifted_schubert(KSubset(n, s), CyclicOrder(t, n));
                    auto dual = dual_shifted_schubert(KSubset(n, s), CyclicOrder(t, n));
                    ASSERT_EQ(oracle::family(sm), oracle::schubert(s, t, n));
                    ASSERT_EQ(oracle::family(dual), oracle::dual_schubert(s, t, n));
                    ASSERT_TRUE(is_matroid(sm));
                    ASSERT_TRUE(is_matroid(dual));
                }
            });
}

TEST(Matroid, Examples)
{
    EXPECT_TRUE(is_matroid(BasisCollection::uniform(4, 2)));
    EXPECT_FALSE(is_matroid(bases(4, 2, {{1, 2}, {3, 4}})));
    EXPECT_TRUE(is_matroid(bases(4, 2, {{1, 2}})));
    EXPECT_THROW(is_matroid(BasisCollection(4, 2)), input_error);
}

TEST(Matroid, MatchesOracleOnRandomFamilies)
{
    Rng rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = rng.uniform(2, 6), k = rng.uniform(1, n - 1);
        std::vector<KSubset> picked;
        oracle::subsets(n, k, [&](const oracle::Set& s) {
            if (rng.uniform(0, 3) == 0) picked.emplace_back(n, s);
        });
        if (picked.empty()) continue;
        BasisCollection b(n, k, picked);
        ASSERT_EQ(is_matroid(b), oracle::basis_exchange(oracle::family(b))) << b;
    }
}

TEST(BasisCollection, SetSemantics)
{
    auto b = bases(4, 2, {{3, 4}, {1, 2}, {3, 4}});
    EXPECT_EQ(b.size(), 2u);
    EXPECT_TRUE(b.contains(KSubset(4, {1, 2})));
    EXPECT_FALSE(b.contains(KSubset(4, {1, 3})));
    EXPECT_THROW(bases(4, 2, {{1, 2, 3}}), input_error);
}
