#pragma once

// k-subsets of [n], cyclic orders <_t, the cyclic Gale order, shifted Schubert
// matroids and the basis exchange check.
//
// Ground sets are capped at 64 elements: a subset is a bit mask where bit
// (e-1) stands for element e.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "positroid/errors.hpp"

namespace positroid {

inline constexpr int max_ground_size = 64;

/// Upper bound on the number of subsets any single enumeration may visit.
inline constexpr std::uint64_t max_enumeration = std::uint64_t{1} << 28;

namespace detail {

constexpr std::uint64_t low_bits(int count)
{
    return count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
}

inline void check_ground_size(int n)
{
    if (n < 1 || n > max_ground_size)
        throw input_error("ground size " + std::to_string(n) + " outside [1, "
                          + std::to_string(max_ground_size) + "]");
}

} // namespace detail

class KSubset {
public:
    KSubset() = default;

    KSubset(int n, std::initializer_list<int> elements)
        : KSubset(n, std::span<const int>(elements.begin(), elements.size()))
    {}

    KSubset(int n, std::span<const int> elements) : n_(n)
    {
        detail::check_ground_size(n);
        for (int e : elements) {
            if (e < 1 || e > n)
                throw input_error("element " + std::to_string(e) + " outside [1, "
                                  + std::to_string(n) + "]");
            std::uint64_t bit = std::uint64_t{1} << (e - 1);
            if (mask_ & bit)
                throw input_error("duplicate element " + std::to_string(e));
            mask_ |= bit;
        }
    }

    static KSubset from_mask(int n, std::uint64_t mask)
    {
        detail::check_ground_size(n);
        if (mask & ~detail::low_bits(n))
            throw input_error("mask has bits beyond ground size " + std::to_string(n));
        KSubset s;
        s.n_ = n;
        s.mask_ = mask;
        return s;
    }

    static KSubset full(int n) { return from_mask(n, detail::low_bits(n)); }

    int ground_size() const noexcept { return n_; }
    int size() const noexcept { return std::popcount(mask_); }
    bool empty() const noexcept { return mask_ == 0; }
    std::uint64_t mask() const noexcept { return mask_; }

    bool contains(int e) const noexcept
    {
        return e >= 1 && e <= n_ && ((mask_ >> (e - 1)) & 1u);
    }

    /// Elements in increasing natural order.
    std::vector<int> elements() const
    {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t m = mask_; m; m &= m - 1)
            out.push_back(std::countr_zero(m) + 1);
        return out;
    }

    KSubset with(int e) const { return from_mask(n_, mask_ | bit_of(e)); }
    KSubset without(int e) const { return from_mask(n_, mask_ & ~bit_of(e)); }

    KSubset operator|(const KSubset& o) const { return from_mask(same_n(o), mask_ | o.mask_); }
    KSubset operator&(const KSubset& o) const { return from_mask(same_n(o), mask_ & o.mask_); }
    KSubset operator-(const KSubset& o) const { return from_mask(same_n(o), mask_ & ~o.mask_); }
    bool is_subset_of(const KSubset& o) const noexcept { return (mask_ & ~o.mask_) == 0; }

    friend bool operator==(const KSubset&, const KSubset&) = default;

    /// Ground size, then cardinality, then lexicographic order of the sorted
    /// element lists. This is the canonical listing order.
    friend std::strong_ordering operator<=>(const KSubset& a, const KSubset& b)
    {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        if (auto c = a.size() <=> b.size(); c != 0) return c;
        std::uint64_t diff = a.mask_ ^ b.mask_;
        if (!diff) return std::strong_ordering::equal;
        return (a.mask_ & diff & (~diff + 1)) ? std::strong_ordering::less
                                              : std::strong_ordering::greater;
    }

    std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) s += ',';
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

    friend std::ostream& operator<<(std::ostream& os, const KSubset& s) { return os << s.to_string(); }

private:
    std::uint64_t bit_of(int e) const
    {
        if (e < 1 || e > n_)
            throw input_error("element " + std::to_string(e) + " outside [1, " + std::to_string(n_) + "]");
        return std::uint64_t{1} << (e - 1);
    }

    int same_n(const KSubset& o) const
    {
        detail::require(n_ == o.n_, "subsets over different ground sets");
        return n_;
    }

    int n_ = 0;
    std::uint64_t mask_ = 0;
};

/// The total order t <_t t+1 <_t ... <_t n <_t 1 <_t ... <_t t-1 on [n].
class CyclicOrder {
public:
    CyclicOrder(int t, int n) : t_(t), n_(n)
    {
        detail::check_ground_size(n);
        detail::require(t >= 1 && t <= n, "cyclic order start " + std::to_string(t)
                                              + " outside [1, " + std::to_string(n) + "]");
    }

    int start() const noexcept { return t_; }
    int ground_size() const noexcept { return n_; }

    /// Position of e in <_t; t has rank 0 and t-1 has rank n-1.
    int rank(int e) const
    {
        detail::require(e >= 1 && e <= n_, "element " + std::to_string(e) + " outside [1, "
                                               + std::to_string(n_) + "]");
        return (e - t_ + n_) % n_;
    }

    /// Element at rank r.
    int at(int r) const noexcept { return (t_ - 1 + r) % n_ + 1; }

    /// Re-indexes a mask so that bit r holds the element of rank r.
    std::uint64_t rotate(std::uint64_t mask) const noexcept
    {
        int s = t_ - 1;
        if (s == 0) return mask;
        return ((mask >> s) | (mask << (n_ - s))) & detail::low_bits(n_);
    }

    /// Inverse of rotate.
    std::uint64_t unrotate(std::uint64_t mask) const noexcept
    {
        int s = t_ - 1;
        if (s == 0) return mask;
        return ((mask << s) | (mask >> (n_ - s))) & detail::low_bits(n_);
    }

private:
    int t_;
    int n_;
};

inline int cyclic_rank(int e, const CyclicOrder& o) { return o.rank(e); }

/// Elements of s listed increasing in <_t.
inline std::vector<int> sort_cyclic(const KSubset& s, const CyclicOrder& o)
{
    detail::require(s.ground_size() == o.ground_size(), "subset and order over different ground sets");
    std::vector<int> out;
    out.reserve(s.size());
    for (std::uint64_t m = o.rotate(s.mask()); m; m &= m - 1)
        out.push_back(o.at(std::countr_zero(m)));
    return out;
}

namespace detail {

inline void check_comparable(const KSubset& a, const KSubset& b, const CyclicOrder& o)
{
    require(a.ground_size() == b.ground_size() && a.ground_size() == o.ground_size(),
            "subsets " + a.to_string() + " and " + b.to_string() + " over different ground sets");
    require(a.size() == b.size(), "subsets " + a.to_string() + " and " + b.to_string()
                                      + " have different cardinalities");
}

/// Gale comparison of two masks already rotated into rank order. I <= J iff
/// every initial segment of the order holds at least as many elements of I.
inline bool rotated_gale_leq(std::uint64_t a, std::uint64_t b) noexcept
{
    int balance = 0;
    for (std::uint64_t diff = a ^ b; diff; diff &= diff - 1) {
        std::uint64_t bit = diff & (~diff + 1);
        balance += (a & bit) ? 1 : -1;
        if (balance < 0) return false;
    }
    return true;
}

} // namespace detail

/// Cyclic Gale order: componentwise <=_t after sorting both sides in <_t.
inline bool gale_leq(const KSubset& a, const KSubset& b, const CyclicOrder& o)
{
    detail::check_comparable(a, b, o);
    return detail::rotated_gale_leq(o.rotate(a.mask()), o.rotate(b.mask()));
}

/// Lexicographic order of the <_t-sorted element lists.
inline bool lex_less(const KSubset& a, const KSubset& b, const CyclicOrder& o)
{
    detail::check_comparable(a, b, o);
    std::uint64_t ra = o.rotate(a.mask());
    std::uint64_t diff = ra ^ o.rotate(b.mask());
    return diff && (ra & diff & (~diff + 1));
}

/// C(n, k); exact for n <= 64 after reducing k to min(k, n-k).
inline std::uint64_t binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    return static_cast<std::uint64_t>(r);
}

/// Calls f(mask) for every k-subset of [n], in colex order of masks.
template <typename F>
void for_each_k_mask(int n, int k, F&& f)
{
    detail::check_ground_size(n);
    detail::require(k >= 0 && k <= n, "cardinality " + std::to_string(k) + " outside [0, "
                                          + std::to_string(n) + "]");
    if (binomial(n, k) > max_enumeration)
        throw resource_error("C(" + std::to_string(n) + "," + std::to_string(k)
                             + ") exceeds the enumeration budget");
    std::uint64_t m = detail::low_bits(k);
    const std::uint64_t last = k == 0 ? 0 : detail::low_bits(k) << (n - k);
    for (;;) {
        f(m);
        if (m == last) break;
        std::uint64_t c = m & (~m + 1);
        std::uint64_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
}

/// A set of k-subsets of [n]; stored sorted in canonical order without
/// duplicates. May be empty (e.g. the result of a filter).
class BasisCollection {
public:
    BasisCollection(int n, int k) : n_(n), k_(k)
    {
        detail::check_ground_size(n);
        detail::require(k >= 0 && k <= n, "rank " + std::to_string(k) + " outside [0, "
                                              + std::to_string(n) + "]");
    }

    BasisCollection(int n, int k, std::vector<KSubset> bases) : BasisCollection(n, k)
    {
        for (const auto& b : bases)
            detail::require(b.ground_size() == n && b.size() == k,
                            "basis " + b.to_string() + " does not have ground size "
                                + std::to_string(n) + " and cardinality " + std::to_string(k));
        std::sort(bases.begin(), bases.end());
        bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
        bases_ = std::move(bases);
    }

    /// Every k-subset of [n].
    static BasisCollection uniform(int n, int k)
    {
        return filtered(n, k, [](const KSubset&) { return true; });
    }

    /// All k-subsets of [n] accepted by pred.
    template <typename Pred>
    static BasisCollection filtered(int n, int k, Pred&& pred)
    {
        BasisCollection out(n, k);
        for_each_k_mask(n, k, [&](std::uint64_t m) {
            KSubset s = KSubset::from_mask(n, m);
            if (pred(s)) out.bases_.push_back(s);
        });
        std::sort(out.bases_.begin(), out.bases_.end());
        return out;
    }

    int ground_size() const noexcept { return n_; }
    int rank() const noexcept { return k_; }
    std::size_t size() const noexcept { return bases_.size(); }
    bool empty() const noexcept { return bases_.empty(); }
    const std::vector<KSubset>& bases() const noexcept { return bases_; }
    auto begin() const noexcept { return bases_.begin(); }
    auto end() const noexcept { return bases_.end(); }
    const KSubset& operator[](std::size_t i) const { return bases_[i]; }

    bool contains(const KSubset& s) const
    {
        return std::binary_search(bases_.begin(), bases_.end(), s);
    }

    bool is_subset_of(const BasisCollection& o) const
    {
        return n_ == o.n_ && k_ == o.k_
               && std::includes(o.bases_.begin(), o.bases_.end(), bases_.begin(), bases_.end());
    }

    friend bool operator==(const BasisCollection&, const BasisCollection&) = default;

private:
    int n_;
    int k_;
    std::vector<KSubset> bases_;
};

inline std::ostream& operator<<(std::ostream& os, const BasisCollection& b)
{
    os << '{';
    bool first = true;
    for (const auto& s : b) {
        if (!first) os << ", ";
        os << s;
        first = false;
    }
    return os << '}';
}

/// SM^t_I: every J with I <=_t J.
inline BasisCollection shifted_schubert(const KSubset& lower, const CyclicOrder& o)
{
    detail::require(lower.ground_size() == o.ground_size(), "subset and order over different ground sets");
    const std::uint64_t rl = o.rotate(lower.mask());
    return BasisCollection::filtered(o.ground_size(), lower.size(), [&](const KSubset& s) {
        return detail::rotated_gale_leq(rl, o.rotate(s.mask()));
    });
}

/// Dual shifted Schubert matroid: every H with H <=_t J.
inline BasisCollection dual_shifted_schubert(const KSubset& upper, const CyclicOrder& o)
{
    detail::require(upper.ground_size() == o.ground_size(), "subset and order over different ground sets");
    const std::uint64_t ru = o.rotate(upper.mask());
    return BasisCollection::filtered(o.ground_size(), upper.size(), [&](const KSubset& s) {
        return detail::rotated_gale_leq(o.rotate(s.mask()), ru);
    });
}

/// Basis exchange axiom: for all B1, B2 and x in B1 \ B2 some y in B2 \ B1
/// has B1 - x + y in the collection.
inline bool is_matroid(const BasisCollection& b)
{
    detail::require(!b.empty(), "empty basis collection");
    std::vector<std::uint64_t> masks;
    masks.reserve(b.size());
    for (const auto& s : b) masks.push_back(s.mask());
    std::sort(masks.begin(), masks.end());
    auto has = [&](std::uint64_t m) { return std::binary_search(masks.begin(), masks.end(), m); };

    for (std::uint64_t b1 : masks) {
        for (std::uint64_t b2 : masks) {
            for (std::uint64_t out = b1 & ~b2; out; out &= out - 1) {
                std::uint64_t x = out & (~out + 1);
                bool found = false;
                for (std::uint64_t in = b2 & ~b1; in && !found; in &= in - 1) {
                    std::uint64_t y = in & (~in + 1);
                    found = has((b1 & ~x) | y);
                }
                if (!found) return false;
            }
        }
    }
    return true;
}

} // namespace positroid
