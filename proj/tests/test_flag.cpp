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

BasisCollection relabel(const BasisCollection& b, const std::vector<int>& sigma)
{
    std::vector<KSubset> out;
    for (const auto& s : b) {
        std::vector<int> e;
        for (int x : s.elements()) e.push_back(sigma[x - 1]);
        out.emplace_back(b.ground_size(), e);
    }
    return BasisCollection(b.ground_size(), b.rank(), out);
}

} // namespace

TEST(Flag, MinimalBasis)
{
    auto u23 = BasisCollection::uniform(3, 2);
    EXPECT_EQ(w_minimal_basis(u23, WordOrder({1, 2, 3})), KSubset(3, {1, 2}));
    EXPECT_EQ(w_minimal_basis(u23, WordOrder({3, 1, 2})), KSubset(3, {1, 3}));
    EXPECT_EQ(w_minimal_basis(bases(3, 2, {{1, 2}}), WordOrder({2, 3, 1})), KSubset(3, {1, 2}));
    EXPECT_THROW(w_minimal_basis(bases(4, 2, {{1, 2}, {3, 4}}), WordOrder({1, 2, 3, 4})), input_error);
    EXPECT_THROW(WordOrder({1, 1, 2}), input_error);
}

TEST(Flag, MinimalBasisMatchesLexOracle)
{
    Rng rng(31);
    for (int n = 2; n <= 6; ++n)
        for_each_decorated_permutation(n, [&](const DecoratedPermutation& p) {
            auto M = positroid_from_necklace(necklace_from_perm(p));
            auto w = random_word(rng, n);
            ASSERT_EQ(w_minimal_basis(M, WordOrder(w)).elements(), oracle::w_lex_min(oracle::family(M), w));
        });
}

TEST(Flag, Concordance)
{
    auto single = [](int n, std::vector<std::vector<int>> l) { return bases(n, static_cast<int>(l[0].size()), l); };
    EXPECT_TRUE(are_concordant(ConstituentList({single(2, {{1}, {2}}), single(2, {{1, 2}})})).concordant);
    auto no = are_concordant(ConstituentList({single(3, {{1}}), single(3, {{2, 3}})}));
    EXPECT_FALSE(no.concordant);
    EXPECT_TRUE(no.certified);
    EXPECT_TRUE(no.counterexample.has_value());
    EXPECT_TRUE(are_concordant(ConstituentList({BasisCollection::uniform(3, 1), BasisCollection::uniform(3, 2)})));
    EXPECT_THROW(ConstituentList({BasisCollection::uniform(3, 2), BasisCollection::uniform(3, 1)}), input_error);
    EXPECT_THROW(ConstituentList({BasisCollection::uniform(3, 1), BasisCollection::uniform(4, 2)}), input_error);
}

TEST(Flag, SampledConcordanceIsNotCertified)
{
    auto r = are_concordant(ConstituentList({BasisCollection::uniform(8, 1), BasisCollection::uniform(8, 2)}),
                            ConcordanceOptions{7, 200, 1});
    EXPECT_TRUE(r.concordant);
    EXPECT_FALSE(r.certified);
    auto no = are_concordant(ConstituentList({bases(8, 1, {{1}}), bases(8, 2, {{2, 3}})}), ConcordanceOptions{7, 200, 1});
    EXPECT_FALSE(no.concordant);
    EXPECT_TRUE(no.certified);
}

TEST(Flag, Collection)
{
    auto flags = flag_collection(ConstituentList({bases(2, 1, {{1}, {2}}), bases(2, 2, {{1, 2}})}));
    ASSERT_EQ(flags.size(), 2u);
    EXPECT_EQ(flags[0].constituents(), (std::vector<KSubset>{KSubset(2, {1}), KSubset(2, {1, 2})}));
    EXPECT_EQ(flags[1].constituents(), (std::vector<KSubset>{KSubset(2, {2}), KSubset(2, {1, 2})}));

    auto one = flag_collection(ConstituentList({BasisCollection::uniform(4, 2)}));
    EXPECT_EQ(one.size(), 6u);
    for (const auto& f : one) EXPECT_EQ(f.length(), 1u);

    EXPECT_EQ(flag_collection(ConstituentList({BasisCollection::uniform(3, 1), BasisCollection::uniform(3, 2)})).size(),
              6u);
    EXPECT_THROW(flag_collection(ConstituentList({bases(3, 1, {{1}}), bases(3, 2, {{2, 3}})})), input_error);
    EXPECT_THROW(Flag({KSubset(3, {1, 2}), KSubset(3, {1, 3})}), input_error);
}

TEST(Flag, FlagPositroid)
{
    EXPECT_TRUE(is_flag_positroid({BasisCollection::uniform(3, 1), BasisCollection::uniform(3, 2)}));
    EXPECT_FALSE(is_flag_positroid({bases(4, 2, {{1, 3}, {2, 4}}), BasisCollection::uniform(4, 3)}));
    EXPECT_TRUE(is_flag_positroid({bases(5, 3, {{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}, {3, 4, 5}})}));
}

TEST(Flag, RelabelingCovariance)
{
    Rng rng(37);
    int concordant = 0, discordant = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = rng.uniform(2, 6);
        auto M1 = positroid_from_necklace(necklace_from_perm(random_decorated_permutation(rng, n)));
        auto M2 = positroid_from_necklace(necklace_from_perm(random_decorated_permutation(rng, n)));
        if (M1.rank() == M2.rank()) continue;
        if (M1.rank() > M2.rank()) std::swap(M1, M2);
        auto sigma = random_word(rng, n);
        const bool here = are_concordant(ConstituentList({M1, M2})).concordant;
        const bool there = are_concordant(ConstituentList({relabel(M1, sigma), relabel(M2, sigma)})).concordant;
        ASSERT_EQ(here, there);
        (here ? concordant : discordant)++;
    }
    EXPECT_GT(concordant, 0);
    EXPECT_GT(discordant, 0);
}

TEST(Flag, ProjectionRecoversConstituents)
{
    for (int n = 2; n <= 4; ++n) {
        std::vector<BasisCollection> all;
        for_each_decorated_permutation(n, [&](const DecoratedPermutation& p) {
            all.push_back(positroid_from_necklace(necklace_from_perm(p)));
        });
        int checked = 0;
        for (const auto& M1 : all)
            for (const auto& M2 : all) {
                if (M1.rank() >= M2.rank()) continue;
                ConstituentList c({M1, M2});
                if (!are_concordant(c).concordant) continue;
                ++checked;
                std::vector<KSubset> p1, p2;
                for (const auto& f : flag_collection(c)) {
                    p1.push_back(f[0]);
                    p2.push_back(f[1]);
                }
                ASSERT_EQ(BasisCollection(n, M1.rank(), p1), M1);
                ASSERT_EQ(BasisCollection(n, M2.rank(), p2), M2);
            }
        EXPECT_GT(checked, 0);
    }
}
