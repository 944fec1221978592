#pragma once

// Lattice path matroids LP_{I,J}: their bases, their decorated permutation,
// and the zero-patterned Vandermonde matrix whose maximal minors are positive
// exactly on LP_{I,J}. All arithmetic here is exact.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "positroid/decorated_permutation.hpp"

namespace positroid {

using BigInt = boost::multiprecision::cpp_int;

/// Largest bit length realize() will produce for a matrix entry. At this size
/// entries are about 1 MiB each; minor certificates near the cap are slow.
inline constexpr std::uint64_t max_entry_bits = std::uint64_t{1} << 23;

/// I <= J in the natural Gale order.
class LatticePathBounds {
public:
    LatticePathBounds(KSubset lower, KSubset upper) : lower_(std::move(lower)), upper_(std::move(upper))
    {
        detail::require(lower_.ground_size() == upper_.ground_size() && lower_.size() == upper_.size(),
                        "bounds " + lower_.to_string() + " and " + upper_.to_string()
                            + " differ in ground size or cardinality");
        detail::require(gale_leq(lower_, upper_, CyclicOrder(1, lower_.ground_size())),
                        "lower bound " + lower_.to_string() + " is not Gale-below " + upper_.to_string());
    }

    const KSubset& lower() const noexcept { return lower_; }
    const KSubset& upper() const noexcept { return upper_; }
    int ground_size() const noexcept { return lower_.ground_size(); }
    int rank() const noexcept { return lower_.size(); }

    friend bool operator==(const LatticePathBounds&, const LatticePathBounds&) = default;

private:
    KSubset lower_;
    KSubset upper_;
};

/// { H | I <= H <= J }.
inline BasisCollection lattice_path_bases(const LatticePathBounds& b)
{
    // The natural order needs no rotation.
    return BasisCollection::filtered(b.ground_size(), b.rank(), [&](const KSubset& h) {
        return detail::rotated_gale_leq(b.lower().mask(), h.mask())
               && detail::rotated_gale_leq(h.mask(), b.upper().mask());
    });
}

/// pi(j_r) = i_r on J, pi(d_r) = c_r from the complement of J onto the
/// complement of I; fixed points in J are coloops, the rest loops.
inline DecoratedPermutation lp_decorated_perm(const LatticePathBounds& b)
{
    const int n = b.ground_size();
    const KSubset all = KSubset::full(n);
    const auto i = b.lower().elements();
    const auto j = b.upper().elements();
    const auto c = (all - b.lower()).elements();
    const auto d = (all - b.upper()).elements();
    std::vector<int> pi(n);
    for (std::size_t r = 0; r < j.size(); ++r) pi[j[r] - 1] = i[r];
    for (std::size_t r = 0; r < d.size(); ++r) pi[d[r] - 1] = c[r];
    std::vector<std::pair<int, FixedPointColor>> colors;
    for (int t = 1; t <= n; ++t)
        if (pi[t - 1] == t)
            colors.emplace_back(t, b.upper().contains(t) ? FixedPointColor::coloop : FixedPointColor::loop);
    return DecoratedPermutation(std::move(pi), colors);
}

struct ExactMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<BigInt> variables;  ///< x_1, ..., x_k
    std::vector<BigInt> entries;    ///< row-major

    const BigInt& operator()(int r, int c) const { return entries.at(static_cast<std::size_t>((r - 1) * cols + (c - 1))); }
};

/// Bit length of the largest entry of realize(b), saturating.
inline std::uint64_t realization_entry_bits(int n, int k)
{
    // log2 x_k = k^{2(k-1)}; largest entry is x_k^{n-1}.
    std::uint64_t bits = static_cast<std::uint64_t>(n > 1 ? n - 1 : 0);
    const std::uint64_t k2 = static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(k);
    for (int i = 1; i < k; ++i) {
        if (bits > max_entry_bits) break;
        bits *= k2;
    }
    return bits;
}

/// v_ij = x_i^{j-1} when a_i <= j <= b_i, else 0, with x_1 = 2 and
/// x_{i+1} = x_i^{k^2}.
inline ExactMatrix realize(const LatticePathBounds& b)
{
    const int n = b.ground_size();
    const int k = b.rank();
    if (realization_entry_bits(n, k) > max_entry_bits)
        throw resource_error("realizing rank " + std::to_string(k) + " on " + std::to_string(n)
                             + " elements needs entries beyond " + std::to_string(max_entry_bits) + " bits");
    ExactMatrix m;
    m.rows = k;
    m.cols = n;
    m.entries.assign(static_cast<std::size_t>(k) * n, BigInt(0));
    const auto lo = b.lower().elements();
    const auto hi = b.upper().elements();
    std::uint64_t log_x = 1;
    for (int i = 1; i <= k; ++i) {
        m.variables.push_back(BigInt(1) << log_x);
        for (int j = lo[i - 1]; j <= hi[i - 1]; ++j)
            m.entries[static_cast<std::size_t>((i - 1) * n + (j - 1))] = BigInt(1) << (log_x * (j - 1));
        log_x *= static_cast<std::uint64_t>(k) * k;
    }
    return m;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline BigInt bareiss_determinant(std::vector<BigInt> a, int size)
{
    if (size == 0) return BigInt(1);
    auto at = [&](int r, int c) -> BigInt& { return a[static_cast<std::size_t>(r * size + c)]; };
    BigInt prev(1);
    int sign = 1;
    for (int p = 0; p < size - 1; ++p) {
        if (at(p, p) == 0) {
            int swap_row = p + 1;
            while (swap_row < size && at(swap_row, p) == 0) ++swap_row;
            if (swap_row == size) return BigInt(0);
            for (int c = 0; c < size; ++c) std::swap(at(p, c), at(swap_row, c));
            sign = -sign;
        }
        for (int r = p + 1; r < size; ++r) {
            for (int c = p + 1; c < size; ++c) at(r, c) = (at(r, c) * at(p, p) - at(r, p) * at(p, c)) / prev;
            at(r, p) = 0;
        }
        prev = at(p, p);
    }
    return sign * at(size - 1, size - 1);
}

/// Maximal minor on the columns of h, taken in increasing order.
inline BigInt maximal_minor(const ExactMatrix& m, const KSubset& h)
{
    detail::require(h.ground_size() == m.cols && h.size() == m.rows, "column set " + h.to_string()
                                                                         + " does not fit the matrix");
    const auto cols = h.elements();
    std::vector<BigInt> sub;
    sub.reserve(static_cast<std::size_t>(m.rows) * m.rows);
    for (int r = 1; r <= m.rows; ++r)
        for (int c : cols) sub.push_back(m(r, c));
    return bareiss_determinant(std::move(sub), m.rows);
}

struct MinorCertificate {
    bool passed = true;
    std::optional<KSubset> witness;  ///< first H breaking the pattern
    BigInt witness_minor;
    std::string reason;
};

/// Checks every maximal minor: positive on LP_{I,J}, zero elsewhere.
inline MinorCertificate certify_minors(const ExactMatrix& m, const LatticePathBounds& b)
{
    const BasisCollection lp = lattice_path_bases(b);
    MinorCertificate cert;
    for_each_k_mask(m.cols, m.rows, [&](std::uint64_t mask) {
        if (!cert.passed) return;
        const KSubset h = KSubset::from_mask(m.cols, mask);
        BigInt minor = maximal_minor(m, h);
        const bool in_lp = lp.contains(h);
        std::string why;
        if (minor < 0)
            why = "negative minor";
        else if (in_lp && minor == 0)
            why = "zero minor on a lattice path basis";
        else if (!in_lp && minor != 0)
            why = "nonzero minor outside the lattice path matroid";
        if (!why.empty()) {
            cert.passed = false;
            cert.witness = h;
            cert.witness_minor = std::move(minor);
            cert.reason = std::move(why);
        }
    });
    return cert;
}

inline bool minor_sign_certificate(const ExactMatrix& m, const LatticePathBounds& b)
{
    return certify_minors(m, b).passed;
}

} // namespace positroid
