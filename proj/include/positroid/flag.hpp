#pragma once

// Flag matroids and flag positroids via the concordance criterion: for every
// ordering w of the ground set, the w-minimal bases of the constituents must
// be nested.
//
// Convention: a <=_w b iff a appears no later than b in the word w, i.e.
// w^{-1}(a) <= w^{-1}(b).

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "positroid/necklace.hpp"
#include "positroid/random.hpp"

namespace positroid {

/// A total order on [n] given by a permutation word.
class WordOrder {
public:
    explicit WordOrder(std::vector<int> word) : word_(std::move(word))
    {
        const int n = static_cast<int>(word_.size());
        detail::check_ground_size(n);
        pos_.assign(n, -1);
        for (int p = 0; p < n; ++p) {
            const int a = word_[p];
            detail::require(a >= 1 && a <= n && pos_[a - 1] < 0, "word is not a permutation of [1, "
                                                                     + std::to_string(n) + "]");
            pos_[a - 1] = p;
        }
    }

    int ground_size() const noexcept { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const noexcept { return word_; }
    int position(int a) const { return pos_.at(a - 1); }

    /// Re-indexes a mask so that bit p holds the element at position p.
    std::uint64_t reindex(std::uint64_t mask) const noexcept
    {
        std::uint64_t out = 0;
        for (; mask; mask &= mask - 1) out |= std::uint64_t{1} << pos_[std::countr_zero(mask)];
        return out;
    }

private:
    std::vector<int> word_;
    std::vector<int> pos_;
};

/// Gale order with respect to <=_w.
inline bool gale_leq(const KSubset& a, const KSubset& b, const WordOrder& w)
{
    detail::require(a.ground_size() == w.ground_size() && b.ground_size() == w.ground_size()
                        && a.size() == b.size(),
                    "subsets " + a.to_string() + " and " + b.to_string() + " are not comparable");
    return detail::rotated_gale_leq(w.reindex(a.mask()), w.reindex(b.mask()));
}

namespace detail {

/// Basis that is Gale-below every basis, found by direct comparison.
inline std::optional<KSubset> gale_minimum(const BasisCollection& b, const WordOrder& w)
{
    std::vector<std::uint64_t> keys;
    keys.reserve(b.size());
    for (const auto& s : b) keys.push_back(w.reindex(s.mask()));
    for (std::size_t i = 0; i < keys.size(); ++i) {
        bool below_all = true;
        for (std::size_t j = 0; j < keys.size() && below_all; ++j)
            below_all = rotated_gale_leq(keys[i], keys[j]);
        if (below_all) return b[i];
    }
    return std::nullopt;
}

} // namespace detail

/// The <=_w Gale-minimal basis of a matroid.
inline KSubset w_minimal_basis(const BasisCollection& b, const WordOrder& w)
{
    detail::require(b.ground_size() == w.ground_size(), "order and collection over different ground sets");
    detail::require(is_matroid(b), "collection is not a matroid");
    auto m = detail::gale_minimum(b, w);
    detail::ensure(m.has_value(), "matroid without a Gale-minimal basis");
    return *m;
}

/// Strictly increasing chain of subsets F^1 < F^2 < ... < F^m.
class Flag {
public:
    explicit Flag(std::vector<KSubset> parts) : parts_(std::move(parts))
    {
        detail::require(!parts_.empty(), "empty flag");
        for (std::size_t i = 1; i < parts_.size(); ++i)
            detail::require(parts_[i - 1].ground_size() == parts_[i].ground_size()
                                && parts_[i - 1].is_subset_of(parts_[i]) && parts_[i - 1] != parts_[i],
                            "flag constituents " + parts_[i - 1].to_string() + " and " + parts_[i].to_string()
                                + " are not strictly nested");
    }

    const std::vector<KSubset>& constituents() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    const KSubset& operator[](std::size_t i) const { return parts_.at(i); }

    std::vector<int> ranks() const
    {
        std::vector<int> r;
        for (const auto& p : parts_) r.push_back(p.size());
        return r;
    }

    friend auto operator<=>(const Flag&, const Flag&) = default;
    friend bool operator==(const Flag&, const Flag&) = default;

private:
    std::vector<KSubset> parts_;
};

/// Basis collections M_1, ..., M_m on a common ground set with strictly
/// increasing ranks. Each is nonempty; being a matroid is checked by the
/// operations that need it.
class ConstituentList {
public:
    explicit ConstituentList(std::vector<BasisCollection> parts) : parts_(std::move(parts))
    {
        detail::require(!parts_.empty(), "no constituents");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            detail::require(!parts_[i].empty(), "constituent " + std::to_string(i + 1) + " has no bases");
            detail::require(parts_[i].ground_size() == parts_[0].ground_size(),
                            "constituents over different ground sets");
            detail::require(i == 0 || parts_[i - 1].rank() < parts_[i].rank(),
                            "constituent ranks are not strictly increasing");
        }
    }

    int ground_size() const noexcept { return parts_.front().ground_size(); }
    std::size_t size() const noexcept { return parts_.size(); }
    const BasisCollection& operator[](std::size_t i) const { return parts_.at(i); }
    const std::vector<BasisCollection>& constituents() const noexcept { return parts_; }

    friend bool operator==(const ConstituentList&, const ConstituentList&) = default;

private:
    std::vector<BasisCollection> parts_;
};

struct ConcordanceOptions {
    int exhaustive_cap = 7;       ///< test all n! orders when n <= cap
    int samples = 5000;           ///< random orders tested beyond the cap
    std::uint64_t seed = 0;
};

struct ConcordanceResult {
    bool concordant = true;
    /// False when only sampled orders were tested and none refuted; such a
    /// verdict is not a proof.
    bool certified = true;
    std::optional<std::vector<int>> counterexample;  ///< refuting word w

    explicit operator bool() const noexcept { return concordant; }
};

namespace detail {

inline bool minima_nested(const ConstituentList& c, const WordOrder& w)
{
    std::optional<KSubset> prev;
    for (const auto& m : c.constituents()) {
        auto cur = gale_minimum(m, w);
        ensure(cur.has_value(), "matroid without a Gale-minimal basis");
        if (prev && !prev->is_subset_of(*cur)) return false;
        prev = cur;
    }
    return true;
}

} // namespace detail

inline ConcordanceResult are_concordant(const ConstituentList& c, const ConcordanceOptions& opt = {})
{
    for (const auto& m : c.constituents()) detail::require(is_matroid(m), "constituent is not a matroid");
    const int n = c.ground_size();
    ConcordanceResult result;
    auto test = [&](const std::vector<int>& word) {
        if (detail::minima_nested(c, WordOrder(word))) return true;
        result.concordant = false;
        result.counterexample = word;
        return false;
    };
    if (n <= opt.exhaustive_cap) {
        std::vector<int> word(n);
        for (int i = 0; i < n; ++i) word[i] = i + 1;
        do {
            if (!test(word)) return result;
        } while (std::next_permutation(word.begin(), word.end()));
        return result;
    }
    result.certified = false;
    Rng rng(opt.seed);
    for (int s = 0; s < opt.samples; ++s)
        if (!test(random_word(rng, n))) {
            result.certified = true;  // a refutation is definitive
            return result;
        }
    return result;
}

/// Every chain B_1 < ... < B_m with B_i a basis of M_i, in canonical order.
inline std::vector<Flag> flag_collection(const ConstituentList& c, const ConcordanceOptions& opt = {})
{
    detail::require(are_concordant(c, opt).concordant, "constituents are not concordant");
    std::vector<Flag> out;
    std::vector<KSubset> chain;
    std::function<void(std::size_t)> rec = [&](std::size_t level) {
        if (level == c.size()) {
            out.emplace_back(chain);
            return;
        }
        for (const auto& b : c[level]) {
            if (!chain.empty() && !chain.back().is_subset_of(b)) continue;
            chain.push_back(b);
            rec(level + 1);
            chain.pop_back();
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Concordant constituents that are all positroids. Beyond the exhaustive
/// cap the concordance half rests on sampled orders.
inline bool is_flag_positroid(const std::vector<BasisCollection>& parts, const ConcordanceOptions& opt = {})
{
    for (const auto& m : parts)
        if (m.empty() || !is_positroid(m)) return false;
    return are_concordant(ConstituentList(parts), opt).concordant;
}

} // namespace positroid
