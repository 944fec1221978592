#pragma once

// Grassmann necklaces: validation, extraction from a basis collection, the
// intersection of cyclically shifted Schubert matroids, and the positroid
// decision procedure built on them.

#include <string>
#include <vector>

#include "positroid/subset.hpp"

namespace positroid {

/// Cyclic successor in [1, n].
inline int cyclic_next(int i, int n) noexcept { return i % n + 1; }

namespace detail {

/// Empty string when seq satisfies the necklace exchange rule, otherwise a
/// description of the first violation.
inline std::string necklace_violation(const std::vector<KSubset>& seq)
{
    const int n = static_cast<int>(seq.size());
    for (int i = 1; i <= n; ++i) {
        const KSubset& cur = seq[i - 1];
        const KSubset& next = seq[cyclic_next(i, n) - 1];
        const std::string at = "I_" + std::to_string(i) + " -> I_" + std::to_string(cyclic_next(i, n));
        if (cur.contains(i)) {
            KSubset kept = cur.without(i);
            if (!kept.is_subset_of(next) || (next - kept).size() != 1)
                return at + ": " + std::to_string(i) + " in " + cur.to_string() + " but "
                       + next.to_string() + " is not " + kept.to_string() + " plus one element";
        } else if (next != cur) {
            return at + ": " + std::to_string(i) + " not in " + cur.to_string() + " but "
                   + next.to_string() + " differs";
        }
    }
    return {};
}

inline void check_sequence_shape(const std::vector<KSubset>& seq)
{
    require(!seq.empty(), "empty subset sequence");
    const int n = seq.front().ground_size();
    require(static_cast<int>(seq.size()) == n, "sequence length " + std::to_string(seq.size())
                                                   + " differs from ground size " + std::to_string(n));
    const int k = seq.front().size();
    for (const auto& s : seq)
        require(s.ground_size() == n && s.size() == k,
                "entry " + s.to_string() + " does not share ground size and cardinality with "
                    + seq.front().to_string());
}

} // namespace detail

/// Sequence (I_1, ..., I_n) obeying the Grassmann necklace exchange rule.
class GrassmannNecklace {
public:
    explicit GrassmannNecklace(std::vector<KSubset> entries) : entries_(std::move(entries))
    {
        detail::check_sequence_shape(entries_);
        if (auto why = detail::necklace_violation(entries_); !why.empty())
            throw input_error("not a Grassmann necklace: " + why);
    }

    int ground_size() const noexcept { return static_cast<int>(entries_.size()); }
    int rank() const noexcept { return entries_.front().size(); }

    /// I_i for 1 <= i <= n.
    const KSubset& operator[](int i) const { return entries_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<KSubset>& entries() const noexcept { return entries_; }

    friend bool operator==(const GrassmannNecklace&, const GrassmannNecklace&) = default;

private:
    std::vector<KSubset> entries_;
};

inline bool is_grassmann_necklace(const std::vector<KSubset>& seq)
{
    detail::check_sequence_shape(seq);
    return detail::necklace_violation(seq).empty();
}

/// The sequence of <_i lexicographically minimal members. Not necessarily a
/// valid necklace unless b is a positroid.
inline std::vector<KSubset> minimal_sequence(const BasisCollection& b)
{
    detail::require(!b.empty(), "empty basis collection");
    const int n = b.ground_size();
    std::vector<KSubset> out;
    out.reserve(n);
    for (int t = 1; t <= n; ++t) {
        CyclicOrder o(t, n);
        const KSubset* best = &b[0];
        for (const auto& s : b)
            if (lex_less(s, *best, o)) best = &s;
        out.push_back(*best);
    }
    return out;
}

/// Grassmann necklace of a positroid; throws input_error when the extracted
/// sequence is not a necklace.
inline GrassmannNecklace necklace_of(const BasisCollection& b)
{
    return GrassmannNecklace(minimal_sequence(b));
}

namespace detail {

inline void check_member_shape(const KSubset& h, const std::vector<KSubset>& entries)
{
    require(h.ground_size() == static_cast<int>(entries.size()) && h.size() == entries.front().size(),
            "subset " + h.to_string() + " does not match necklace ground size and rank");
}

} // namespace detail

/// H >=_t I_t for every t.
inline bool member(const KSubset& h, const GrassmannNecklace& neck)
{
    detail::check_member_shape(h, neck.entries());
    const int n = neck.ground_size();
    for (int t = 1; t <= n; ++t) {
        CyclicOrder o(t, n);
        if (!detail::rotated_gale_leq(o.rotate(neck[t].mask()), o.rotate(h.mask()))) return false;
    }
    return true;
}

/// The intersection of SM^t_{I_t} over all t.
inline BasisCollection positroid_from_necklace(const GrassmannNecklace& neck)
{
    const int n = neck.ground_size();
    std::vector<CyclicOrder> orders;
    std::vector<std::uint64_t> lower;
    for (int t = 1; t <= n; ++t) {
        orders.emplace_back(t, n);
        lower.push_back(orders.back().rotate(neck[t].mask()));
    }
    return BasisCollection::filtered(n, neck.rank(), [&](const KSubset& h) {
        for (int t = 0; t < n; ++t)
            if (!detail::rotated_gale_leq(lower[t], orders[t].rotate(h.mask()))) return false;
        return true;
    });
}

inline bool is_positroid(const BasisCollection& b)
{
    auto seq = minimal_sequence(b);
    if (!detail::necklace_violation(seq).empty()) return false;
    return positroid_from_necklace(GrassmannNecklace(std::move(seq))) == b;
}

} // namespace positroid
