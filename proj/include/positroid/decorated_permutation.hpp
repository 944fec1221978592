#pragma once

// Decorated permutations, the bijection with Grassmann necklaces, upper
// Grassmann necklaces and the dual Schubert intersection.

#include <sstream>
#include <string>
#include <vector>

#include "positroid/necklace.hpp"

namespace positroid {

/// Color of a fixed point: a loop (+1) lies in no basis, a coloop (-1) in all.
enum class FixedPointColor : int { coloop = -1, none = 0, loop = 1 };

class DecoratedPermutation {
public:
    /// images[i-1] = pi(i). colors assigns a color to every fixed point.
    DecoratedPermutation(std::vector<int> images, const std::vector<std::pair<int, FixedPointColor>>& colors)
        : pi_(std::move(images)), col_(pi_.size(), FixedPointColor::none)
    {
        const int n = ground_size();
        detail::check_ground_size(n);
        inv_.assign(n, 0);
        for (int i = 1; i <= n; ++i) {
            int j = pi_[i - 1];
            detail::require(j >= 1 && j <= n, "image " + std::to_string(j) + " outside [1, "
                                                  + std::to_string(n) + "]");
            detail::require(inv_[j - 1] == 0, "value " + std::to_string(j) + " hit twice; not a permutation");
            inv_[j - 1] = i;
        }
        for (auto [i, c] : colors) {
            detail::require(i >= 1 && i <= n && pi_[i - 1] == i,
                            "color given for " + std::to_string(i) + ", which is not a fixed point");
            detail::require(c != FixedPointColor::none, "fixed point " + std::to_string(i) + " colored 0");
            detail::require(col_[i - 1] == FixedPointColor::none,
                            "fixed point " + std::to_string(i) + " colored twice");
            col_[i - 1] = c;
        }
        for (int i = 1; i <= n; ++i)
            detail::require(pi_[i - 1] != i || col_[i - 1] != FixedPointColor::none,
                            "fixed point " + std::to_string(i) + " has no color");
    }

    int ground_size() const noexcept { return static_cast<int>(pi_.size()); }
    int operator()(int i) const { return pi_.at(static_cast<std::size_t>(i - 1)); }
    int inverse(int j) const { return inv_.at(static_cast<std::size_t>(j - 1)); }
    bool is_fixed(int i) const { return (*this)(i) == i; }
    FixedPointColor color(int i) const { return col_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& images() const noexcept { return pi_; }

    std::vector<std::pair<int, FixedPointColor>> colors() const
    {
        std::vector<std::pair<int, FixedPointColor>> out;
        for (int i = 1; i <= ground_size(); ++i)
            if (is_fixed(i)) out.emplace_back(i, color(i));
        return out;
    }

    /// |I_1|: the coloops plus every j with j < pi^{-1}(j).
    int rank() const
    {
        int k = 0;
        for (int j = 1; j <= ground_size(); ++j)
            if (j < inverse(j) || col_[j - 1] == FixedPointColor::coloop) ++k;
        return k;
    }

    /// Image of a subset under pi^{-1}.
    KSubset preimage(const KSubset& s) const
    {
        std::uint64_t m = 0;
        for (int e : s.elements()) m |= std::uint64_t{1} << (inverse(e) - 1);
        return KSubset::from_mask(ground_size(), m);
    }

    KSubset image(const KSubset& s) const
    {
        std::uint64_t m = 0;
        for (int e : s.elements()) m |= std::uint64_t{1} << ((*this)(e) - 1);
        return KSubset::from_mask(ground_size(), m);
    }

    /// One-line notation followed by the fixed point colors, e.g.
    /// "8 1 4 2 5 7 3 6 ; 5:+".
    std::string to_string() const
    {
        std::ostringstream os;
        for (int v : pi_) os << v << ' ';
        os << ';';
        for (auto [i, c] : colors()) os << ' ' << i << ':' << (c == FixedPointColor::loop ? '+' : '-');
        return os.str();
    }

    friend bool operator==(const DecoratedPermutation& a, const DecoratedPermutation& b)
    {
        return a.pi_ == b.pi_ && a.col_ == b.col_;
    }

private:
    std::vector<int> pi_;
    std::vector<int> inv_;
    std::vector<FixedPointColor> col_;
};

inline std::ostream& operator<<(std::ostream& os, const DecoratedPermutation& p) { return os << p.to_string(); }

/// Reads pi off the necklace transitions I_i -> I_{i+1}.
inline DecoratedPermutation perm_from_necklace(const GrassmannNecklace& neck)
{
    const int n = neck.ground_size();
    std::vector<int> pi(n);
    std::vector<std::pair<int, FixedPointColor>> colors;
    for (int i = 1; i <= n; ++i) {
        const KSubset& cur = neck[i];
        const KSubset& next = neck[cyclic_next(i, n)];
        if (next == cur) {
            pi[i - 1] = i;
            colors.emplace_back(i, cur.contains(i) ? FixedPointColor::coloop : FixedPointColor::loop);
        } else {
            auto added = (next - cur).elements();
            detail::ensure(added.size() == 1, "necklace transition adds more than one element");
            pi[i - 1] = added.front();
        }
    }
    return DecoratedPermutation(std::move(pi), colors);
}

namespace detail {

inline bool is_coloop(const DecoratedPermutation& p, int i)
{
    return p.color(i) == FixedPointColor::coloop;
}

} // namespace detail

/// I_i = { j | j <_i pi^{-1}(j), or j a coloop }.
inline GrassmannNecklace necklace_from_perm(const DecoratedPermutation& p)
{
    const int n = p.ground_size();
    std::vector<KSubset> entries;
    entries.reserve(n);
    for (int i = 1; i <= n; ++i) {
        CyclicOrder o(i, n);
        std::uint64_t m = 0;
        for (int j = 1; j <= n; ++j)
            if (o.rank(j) < o.rank(p.inverse(j)) || detail::is_coloop(p, j)) m |= std::uint64_t{1} << (j - 1);
        entries.push_back(KSubset::from_mask(n, m));
    }
    return GrassmannNecklace(std::move(entries));
}

/// J_r = { i | pi(i) <_r i, or i a coloop }.
inline std::vector<KSubset> upper_necklace_from_perm(const DecoratedPermutation& p)
{
    const int n = p.ground_size();
    std::vector<KSubset> entries;
    entries.reserve(n);
    for (int r = 1; r <= n; ++r) {
        CyclicOrder o(r, n);
        std::uint64_t m = 0;
        for (int i = 1; i <= n; ++i)
            if (o.rank(p(i)) < o.rank(i) || detail::is_coloop(p, i)) m |= std::uint64_t{1} << (i - 1);
        entries.push_back(KSubset::from_mask(n, m));
    }
    return entries;
}

/// Intersection of the dual shifted Schubert matroids over the upper necklace.
inline BasisCollection positroid_from_upper(const DecoratedPermutation& p)
{
    const int n = p.ground_size();
    const auto upper = upper_necklace_from_perm(p);
    std::vector<CyclicOrder> orders;
    std::vector<std::uint64_t> bound;
    for (int r = 1; r <= n; ++r) {
        orders.emplace_back(r, n);
        bound.push_back(orders.back().rotate(upper[r - 1].mask()));
    }
    return BasisCollection::filtered(n, upper.front().size(), [&](const KSubset& h) {
        for (int r = 0; r < n; ++r)
            if (!detail::rotated_gale_leq(orders[r].rotate(h.mask()), bound[r])) return false;
        return true;
    });
}

/// The permutation with pi(a) and pi(b) exchanged. The exchange must not
/// create new fixed points; existing ones keep their colors.
inline DecoratedPermutation swap_images(const DecoratedPermutation& p, int a, int b)
{
    std::vector<int> pi = p.images();
    std::swap(pi.at(a - 1), pi.at(b - 1));
    std::vector<std::pair<int, FixedPointColor>> colors;
    for (int i = 1; i <= p.ground_size(); ++i) {
        if (pi[i - 1] != i) continue;
        detail::require(p.is_fixed(i), "exchange creates uncolored fixed point " + std::to_string(i));
        colors.emplace_back(i, p.color(i));
    }
    return DecoratedPermutation(std::move(pi), colors);
}

} // namespace positroid
