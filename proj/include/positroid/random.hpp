#pragma once

// Seeded generators for random instances. std::mt19937_64 is fully specified
// by the standard, and the helpers below avoid the implementation-defined
// distributions, so a seed yields the same instances on every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "positroid/decorated_permutation.hpp"

namespace positroid {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [lo, hi].
    int uniform(int lo, int hi)
    {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<int>(engine_() % span);
    }

    bool coin() { return (engine_() >> 63) != 0; }

    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(engine_() % i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// A uniformly random permutation of [n] with fair coin colors on its fixed
/// points.
inline DecoratedPermutation random_decorated_permutation(Rng& rng, int n)
{
    std::vector<int> pi(n);
    for (int i = 0; i < n; ++i) pi[i] = i + 1;
    rng.shuffle(pi);
    std::vector<std::pair<int, FixedPointColor>> colors;
    for (int i = 1; i <= n; ++i)
        if (pi[i - 1] == i) colors.emplace_back(i, rng.coin() ? FixedPointColor::loop : FixedPointColor::coloop);
    return DecoratedPermutation(std::move(pi), colors);
}

/// Random k-subset of [n].
inline KSubset random_subset(Rng& rng, int n, int k)
{
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    rng.shuffle(all);
    all.resize(k);
    return KSubset(n, all);
}

/// Random permutation word of [n].
inline std::vector<int> random_word(Rng& rng, int n)
{
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    rng.shuffle(w);
    return w;
}

/// Every decorated permutation of [n], in lexicographic order of the
/// one-line notation with loop before coloop.
template <typename F>
void for_each_decorated_permutation(int n, F&& f)
{
    std::vector<int> pi(n);
    for (int i = 0; i < n; ++i) pi[i] = i + 1;
    do {
        std::vector<int> fixed;
        for (int i = 1; i <= n; ++i)
            if (pi[i - 1] == i) fixed.push_back(i);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << fixed.size()); ++bits) {
            std::vector<std::pair<int, FixedPointColor>> colors;
            for (std::size_t q = 0; q < fixed.size(); ++q)
                colors.emplace_back(fixed[q], ((bits >> (fixed.size() - 1 - q)) & 1u) ? FixedPointColor::coloop
                                                                                     : FixedPointColor::loop);
            f(DecoratedPermutation(pi, colors));
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
}

} // namespace positroid
