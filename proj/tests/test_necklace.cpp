#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace positroid;

namespace {

std::vector<KSubset> seq(int n, std::vector<std::vector<int>> lists)
{
    std::vector<KSubset> out;
    for (const auto& l : lists) out.emplace_back(n, l);
    return out;
}

BasisCollection bases(int n, int k, std::vector<std::vector<int>> lists) { return BasisCollection(n, k, seq(n, lists)); }

const GrassmannNecklace& small_necklace()
{
    static const GrassmannNecklace N(seq(5, {{1, 2, 4}, {2, 4, 5}, {3, 4, 5}, {4, 5, 2}, {5, 1, 2}}));
    return N;
}

const BasisCollection& small_positroid()
{
    static const BasisCollection B =
        bases(5, 3, {{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}});
    return B;
}

template <typename F>
void for_each_valid_necklace(int n, F&& f)
{
    for_each_decorated_permutation(n, [&](const DecoratedPermutation& p) { f(necklace_from_perm(p)); });
}

} // namespace

TEST(Necklace, Validity)
{
    EXPECT_TRUE(is_grassmann_necklace(small_necklace().entries()));
    EXPECT_TRUE(is_grassmann_necklace(seq(4, {{1, 3}, {1, 3}, {1, 3}, {1, 3}})));
    EXPECT_FALSE(is_grassmann_necklace(seq(4, {{1, 3}, {2, 4}, {1, 3}, {2, 4}})));
    EXPECT_THROW(GrassmannNecklace(seq(4, {{1, 3}, {2, 4}, {1, 3}, {2, 4}})), input_error);
    EXPECT_THROW(is_grassmann_necklace(seq(4, {{1, 3}, {2, 4}, {1, 3}})), input_error);
    EXPECT_THROW(is_grassmann_necklace(seq(3, {{1, 3}, {2}, {1, 3}})), input_error);
}

TEST(Necklace, Extraction)
{
    EXPECT_EQ(necklace_of(small_positroid()), small_necklace());
    EXPECT_EQ(necklace_of(bases(3, 2, {{1, 2}})).entries(), seq(3, {{1, 2}, {1, 2}, {1, 2}}));
    EXPECT_EQ(necklace_of(BasisCollection::uniform(4, 2)).entries(), seq(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}));
    EXPECT_THROW(necklace_of(BasisCollection(4, 2)), input_error);
}

TEST(Necklace, LexMinMatchesOracle)
{
    Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = rng.uniform(2, 7), k = rng.uniform(1, n - 1);
        std::vector<KSubset> picked;
        oracle::subsets(n, k, [&](const oracle::Set& s) {
            if (rng.uniform(0, 2) == 0) picked.emplace_back(n, s);
        });
        if (picked.empty()) continue;
        BasisCollection b(n, k, picked);
        auto expect = oracle::lex_min_sequence(oracle::family(b), n);
        auto got = minimal_sequence(b);
        for (int t = 0; t < n; ++t) ASSERT_EQ(got[t].elements(), expect[t]);
    }
}

TEST(Necklace, Membership)
{
    EXPECT_TRUE(member(KSubset(5, {1, 3, 5}), small_necklace()));
    EXPECT_FALSE(member(KSubset(5, {2, 3, 4}), small_necklace()));
    EXPECT_THROW(member(KSubset(5, {1, 3}), small_necklace()), input_error);
    EXPECT_THROW(member(KSubset(6, {1, 3, 5}), small_necklace()), input_error);
}

TEST(Necklace, Intersection)
{
    EXPECT_EQ(positroid_from_necklace(small_necklace()), small_positroid());
    EXPECT_EQ(positroid_from_necklace(GrassmannNecklace(seq(3, {{1, 2}, {1, 2}, {1, 2}}))), bases(3, 2, {{1, 2}}));
    EXPECT_EQ(positroid_from_necklace(GrassmannNecklace(seq(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}}))),
              BasisCollection::uniform(4, 2));
}

TEST(Positroid, Decision)
{
    EXPECT_TRUE(is_positroid(small_positroid()));
    EXPECT_FALSE(is_positroid(bases(4, 2, {{1, 3}, {2, 4}})));
    EXPECT_FALSE(is_positroid(bases(4, 2, {{1, 2}, {1, 4}, {2, 3}, {3, 4}})));
    EXPECT_THROW(is_positroid(BasisCollection(4, 2)), input_error);
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            oracle::subsets(n, k, [&](const oracle::Set& s) {
                for (int t = 1; t <= n; ++t)
                    ASSERT_TRUE(is_positroid(shifted_schubert(KSubset(n, s), CyclicOrder(t, n))));
            });
}

TEST(Necklace, RoundTripAndOracleExhaustive)
{
    for (int n = 1; n <= 5; ++n)
        for_each_valid_necklace(n, [&](const GrassmannNecklace& N) {
            auto P = positroid_from_necklace(N);
            std::vector<oracle::Set> raw;
            for (const auto& e : N.entries()) raw.push_back(e.elements());
            ASSERT_EQ(oracle::family(P), oracle::necklace_intersection(raw, n));
            ASSERT_EQ(necklace_of(P), N);
            ASSERT_TRUE(is_matroid(P));
            ASSERT_TRUE(member(N[1], N));
            for_each_k_mask(n, N.rank(), [&](std::uint64_t m) {
                KSubset h = KSubset::from_mask(n, m);
                ASSERT_EQ(member(h, N), P.contains(h));
            });
            ASSERT_TRUE(P.is_subset_of(shifted_schubert(N[1], CyclicOrder(1, n))));
        });
}

TEST(Necklace, RoundTripRandom)
{
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.uniform(6, 8);
        auto N = necklace_from_perm(random_decorated_permutation(rng, n));
        auto P = positroid_from_necklace(N);
        ASSERT_EQ(necklace_of(P), N);
        ASSERT_TRUE(is_matroid(P));
        ASSERT_TRUE(member(N[1], N));
    }
}

TEST(Necklace, FullDiagramSandwich)
{
    // Equality with the t = 1 Schubert matroid happens exactly for necklaces of full diagrams.
    for (int n = 1; n <= 5; ++n) {
        std::vector<GrassmannNecklace> full;
        for (int k = 0; k <= n; ++k)
            for_each_shape(n, k, [&](const YoungShape& s) { full.push_back(necklace_from_le(LeDiagram::full(s))); });
        for_each_valid_necklace(n, [&](const GrassmannNecklace& N) {
            const bool equal = positroid_from_necklace(N) == shifted_schubert(N[1], CyclicOrder(1, n));
            const bool is_full = std::find(full.begin(), full.end(), N) != full.end();
            ASSERT_EQ(equal, is_full);
        });
    }
}
