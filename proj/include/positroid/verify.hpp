#pragma once

// Cross-oracle verification harness: exhaustive sweeps over small ground sets
// and seeded random sweeps at larger ones, each suite counting mismatches
// between independent routes to the same object.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "positroid/flag.hpp"
#include "positroid/lattice_path.hpp"
#include "positroid/le_diagram.hpp"
#include "positroid/random.hpp"

namespace positroid {

struct SuiteReport {
    std::string name;
    std::uint64_t instances = 0;
    std::uint64_t failures = 0;
    std::string first_failure;

    bool passed() const noexcept { return failures == 0; }
};

struct VerifyOptions {
    int exhaustive_n = 5;          ///< 0 disables exhaustive sweeps
    std::uint64_t random_count = 0;
    std::uint64_t seed = 0;
    int random_n = 8;              ///< ground size for random sweeps
};

namespace detail {

class SuiteRun {
public:
    explicit SuiteRun(std::string name) { report_.name = std::move(name); }

    /// Records one instance; what() describes it and is only evaluated on failure.
    template <typename Describe>
    void check(bool ok, Describe&& what)
    {
        ++report_.instances;
        if (ok) return;
        if (report_.failures++ == 0) report_.first_failure = what();
    }

    /// Runs body, turning an exception into a recorded failure.
    template <typename Body, typename Describe>
    void guarded(Body&& body, Describe&& what)
    {
        try {
            body();
        } catch (const std::exception& e) {
            check(false, [&] { return what() + ": " + e.what(); });
        }
    }

    SuiteReport finish() const { return report_; }

private:
    SuiteReport report_;
};

/// Random Le-diagram: a random shape, then boxes in row-major order, each
/// filled when forced by the Le-property and by a coin flip otherwise.
inline LeDiagram random_le_diagram(Rng& rng, int n)
{
    const int k = rng.uniform(0, n);
    std::vector<int> rows(k);
    int bound = n - k;
    for (int r = 0; r < k; ++r) rows[r] = bound = rng.uniform(0, bound);
    YoungShape shape(n, rows);
    std::vector<std::vector<char>> grid(k);
    std::vector<Cell> dots;
    for (int r = 1; r <= k; ++r) {
        grid[r - 1].assign(rows[r - 1], 0);
        bool left = false;
        for (int c = 1; c <= rows[r - 1]; ++c) {
            bool above = false;
            for (int rr = 1; rr < r; ++rr) above = above || grid[rr - 1][c - 1];
            if ((left && above) || rng.coin()) {
                grid[r - 1][c - 1] = 1;
                dots.push_back({r, c});
                left = true;
            }
        }
    }
    return LeDiagram(shape, dots);
}

/// Random bounds I <= J: pairs of random k-subsets, redrawn until comparable.
inline LatticePathBounds random_bounds(Rng& rng, int n, int k)
{
    for (;;) {
        KSubset a = random_subset(rng, n, k);
        KSubset b = random_subset(rng, n, k);
        CyclicOrder natural(1, n);
        if (gale_leq(a, b, natural)) return LatticePathBounds(a, b);
        if (gale_leq(b, a, natural)) return LatticePathBounds(b, a);
    }
}

inline std::string describe(const DecoratedPermutation& p) { return "perm " + p.to_string(); }

inline std::string describe(const LeDiagram& L)
{
    std::string s = "le shape (";
    for (std::size_t i = 0; i < L.shape().rows().size(); ++i)
        s += (i ? "," : "") + std::to_string(L.shape().rows()[i]);
    s += ") dots";
    for (Cell c : L.dots()) s += " " + to_string(c);
    return s;
}

inline std::string describe(const LatticePathBounds& b)
{
    return "bounds I=" + b.lower().to_string() + " J=" + b.upper().to_string();
}

/// Every positroid handed to this sink is checked for basis exchange.
struct MatroidSink {
    SuiteRun* run;
    void operator()(const BasisCollection& b, const std::function<std::string()>& what) const
    {
        run->check(!b.empty() && is_matroid(b), [&] { return what() + ": basis exchange fails"; });
    }
};

inline void check_perm(SuiteRun& bij, SuiteRun& dual, SuiteRun& neck, SuiteRun& fixed, MatroidSink sink,
                       const DecoratedPermutation& p)
{
    auto what = [&] { return describe(p); };
    bij.guarded(
        [&] {
            GrassmannNecklace N = necklace_from_perm(p);
            bij.check(perm_from_necklace(N) == p, [&] { return what() + ": perm -> necklace -> perm"; });
            bij.check(necklace_from_perm(perm_from_necklace(N)) == N,
                      [&] { return what() + ": necklace -> perm -> necklace"; });
        },
        what);
    dual.guarded(
        [&] {
            GrassmannNecklace N = necklace_from_perm(p);
            auto upper = upper_necklace_from_perm(p);
            bool elementwise = true;
            for (int i = 1; i <= p.ground_size(); ++i) elementwise = elementwise && upper[i - 1] == p.preimage(N[i]);
            dual.check(elementwise, [&] { return what() + ": J_i differs from pi^{-1}(I_i)"; });
            BasisCollection M = positroid_from_necklace(N);
            dual.check(positroid_from_upper(p) == M, [&] { return what() + ": dual intersection differs"; });
            bool bounded = true;
            for (const auto& h : M)
                for (int i = 1; i <= p.ground_size(); ++i)
                    bounded = bounded && gale_leq(h, upper[i - 1], CyclicOrder(i, p.ground_size()));
            dual.check(bounded, [&] { return what() + ": a basis exceeds pi^{-1}(I_i)"; });
            sink(M, what);
        },
        what);
    neck.guarded(
        [&] {
            GrassmannNecklace N = necklace_from_perm(p);
            BasisCollection M = positroid_from_necklace(N);
            neck.check(!M.empty() && M.contains(N[1]), [&] { return what() + ": I_1 not a basis"; });
            neck.check(necklace_of(M) == N, [&] { return what() + ": necklace_of(positroid) differs"; });
            neck.check(is_positroid(M), [&] { return what() + ": is_positroid rejects"; });
            bool agree = true;
            for_each_k_mask(N.ground_size(), N.rank(), [&](std::uint64_t m) {
                KSubset h = KSubset::from_mask(N.ground_size(), m);
                agree = agree && member(h, N) == M.contains(h);
            });
            neck.check(agree, [&] { return what() + ": member disagrees with the intersection"; });
        },
        what);
    fixed.guarded(
        [&] {
            BasisCollection M = positroid_from_necklace(necklace_from_perm(p));
            bool ok = true;
            for (int i = 1; i <= p.ground_size(); ++i) {
                if (!p.is_fixed(i)) continue;
                bool want = p.color(i) == FixedPointColor::coloop;
                for (const auto& h : M) ok = ok && h.contains(i) == want;
            }
            fixed.check(ok, [&] { return what() + ": loop/coloop semantics"; });
        },
        what);
}

inline void check_le(SuiteRun& tri, SuiteRun& full, MatroidSink sink, const LeDiagram& L)
{
    auto what = [&] { return describe(L); };
    tri.guarded(
        [&] {
            BasisCollection M = enumerate_bases(L);
            GrassmannNecklace N = necklace_from_le(L);
            tri.check(M == positroid_from_necklace(N), [&] { return what() + ": bases differ from the intersection"; });
            tri.check(necklace_of(M) == N, [&] { return what() + ": chain necklace differs from extraction"; });
            sink(M, what);
            if (static_cast<int>(L.dots().size()) == L.shape().box_count())
                full.check(M == shifted_schubert(L.shape().labels().sources, CyclicOrder(1, L.ground_size())),
                           [&] { return what() + ": full diagram is not the Schubert matroid"; });
        },
        what);
}

inline void check_bounds(SuiteRun& lp, MatroidSink sink, const LatticePathBounds& b, bool certify)
{
    auto what = [&] { return describe(b); };
    lp.guarded(
        [&] {
            BasisCollection M = lattice_path_bases(b);
            lp.check(is_positroid(M), [&] { return what() + ": not a positroid"; });
            lp.check(lp_decorated_perm(b) == perm_from_necklace(necklace_of(M)),
                     [&] { return what() + ": permutation formula differs from extraction"; });
            sink(M, what);
            if (certify) {
                auto cert = certify_minors(realize(b), b);
                lp.check(cert.passed, [&] {
                    return what() + ": minor certificate fails at " + cert.witness->to_string() + " (" + cert.reason
                           + ")";
                });
            }
        },
        what);
}

/// Finds (a, b, i) with a <_i b <_i pi(a) <_i pi(b) <_i a. Returns false if
/// the permutation admits no such pattern.
inline bool find_swap_pattern(Rng& rng, const DecoratedPermutation& p, int& a, int& b, int& i)
{
    const int n = p.ground_size();
    std::vector<std::array<int, 3>> found;
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            for (int t = 1; t <= n; ++t) {
                CyclicOrder o(t, n);
                int rx = o.rank(x), ry = o.rank(y), rpx = o.rank(p(x)), rpy = o.rank(p(y));
                if (rx < ry && ry < rpx && rpx < rpy) found.push_back({x, y, t});
            }
    if (found.empty()) return false;
    auto pick = found[static_cast<std::size_t>(rng.next() % found.size())];
    a = pick[0];
    b = pick[1];
    i = pick[2];
    return true;
}

/// w_minimal_basis (Gale minimum by direct comparison) against the greedy
/// lexicographic minimum under a random word w.
inline void check_w_minimal(SuiteRun& flag, Rng& rng, const DecoratedPermutation& p)
{
    flag.guarded(
        [&] {
            BasisCollection M = positroid_from_necklace(necklace_from_perm(p));
            WordOrder w(random_word(rng, p.ground_size()));
            KSubset best = M[0];
            for (const auto& h : M) {
                std::uint64_t a = w.reindex(h.mask()), b = w.reindex(best.mask());
                std::uint64_t d = a ^ b;
                if (d && (a & d & (~d + 1))) best = h;
            }
            flag.check(w_minimal_basis(M, w) == best, [&] { return describe(p) + ": w-minimal basis differs"; });
        },
        [&] { return describe(p); });
}

/// The swap lemma as stated: pi's positroid lies inside mu's. mirrored
/// records the reverse inclusion for the same instance.
inline void check_swap(SuiteRun& swap, SuiteRun& mirrored, const DecoratedPermutation& p, int a, int b, int i)
{
    auto what = [&] {
        return describe(p) + " a=" + std::to_string(a) + " b=" + std::to_string(b) + " i=" + std::to_string(i);
    };
    swap.guarded(
        [&] {
            DecoratedPermutation mu = swap_images(p, a, b);
            BasisCollection of_pi = positroid_from_necklace(necklace_from_perm(p));
            BasisCollection of_mu = positroid_from_necklace(necklace_from_perm(mu));
            swap.check(of_pi.is_subset_of(of_mu), [&] { return what() + ": positroid of pi not inside that of mu"; });
            mirrored.check(of_mu.is_subset_of(of_pi), [&] { return what() + ": positroid of mu not inside that of pi"; });
        },
        what);
}

} // namespace detail

/// Runs every suite and returns one report per suite in a fixed order.
inline std::vector<SuiteReport> run_verification(const VerifyOptions& opt)
{
    using detail::SuiteRun;
    SuiteRun gale("gale-order"), schubert("schubert-matroids"), bij("perm-necklace-bijection"),
        dual("upper-necklace-duality"), neck("necklace-intersection"), fixed("fixed-point-colors"),
        tri("le-oracle-triangle"), full("full-le-schubert"), lp("lattice-path"), swap("swap-lemma"),
        mirrored("swap-lemma-reverse-inclusion"),
        flag("flag-minimal-basis"), matroid("matroid-sanity");
    detail::MatroidSink sink{&matroid};

    const int N = opt.exhaustive_n;
    for (int n = 1; n <= N; ++n) {
        for (int k = 0; k <= n; ++k) {
            std::vector<KSubset> all;
            for_each_k_mask(n, k, [&](std::uint64_t m) { all.push_back(KSubset::from_mask(n, m)); });
            for (int t = 1; t <= n; ++t) {
                CyclicOrder o(t, n);
                for (const auto& x : all) {
                    gale.check(gale_leq(x, x, o), [&] { return x.to_string() + " not reflexive"; });
                    for (const auto& y : all) {
                        bool xy = gale_leq(x, y, o);
                        gale.check(!(xy && gale_leq(y, x, o) && x != y), [&] {
                            return x.to_string() + "," + y.to_string() + " break antisymmetry at t=" + std::to_string(t);
                        });
                        if (!xy) continue;
                        for (const auto& z : all)
                            if (gale_leq(y, z, o))
                                gale.check(gale_leq(x, z, o), [&] { return "transitivity at " + x.to_string(); });
                    }
                    BasisCollection sm = shifted_schubert(x, o);
                    auto what = [&] { return "SM at " + x.to_string() + " t=" + std::to_string(t); };
                    schubert.check(sm.contains(x) && is_matroid(sm) && is_positroid(sm),
                                   [&] { return what() + " not a positroid"; });
                    bool dual_ok = true;
                    for (const auto& h : all) dual_ok = dual_ok && (dual_shifted_schubert(x, o).contains(h)
                                                                   == shifted_schubert(h, o).contains(x));
                    schubert.check(dual_ok, [&] { return what() + ": dual relation"; });
                }
            }
            for_each_shape(n, k, [&](const YoungShape& shape) {
                for_each_le_diagram(shape, [&](const LeDiagram& L) { detail::check_le(tri, full, sink, L); });
            });
            if (k <= 4)
                for (const auto& lo : all)
                    for (const auto& hi : all)
                        if (gale_leq(lo, hi, CyclicOrder(1, n)))
                            detail::check_bounds(lp, sink, LatticePathBounds(lo, hi), true);
        }
        Rng swap_rng(opt.seed ^ static_cast<std::uint64_t>(n));
        for_each_decorated_permutation(n, [&](const DecoratedPermutation& p) {
            detail::check_perm(bij, dual, neck, fixed, sink, p);
            int a, b, i;
            if (detail::find_swap_pattern(swap_rng, p, a, b, i)) detail::check_swap(swap, mirrored, p, a, b, i);
            if (n <= 5) detail::check_w_minimal(flag, swap_rng, p);
        });
    }

    if (opt.random_count > 0) {
        Rng rng(opt.seed);
        const int n = opt.random_n;
        for (std::uint64_t s = 0; s < opt.random_count; ++s) {
            DecoratedPermutation p = random_decorated_permutation(rng, n);
            detail::check_perm(bij, dual, neck, fixed, sink, p);
            detail::check_le(tri, full, sink, detail::random_le_diagram(rng, n));
            const int lp_n = rng.uniform(1, std::min(n, 8));
            detail::check_bounds(lp, sink, detail::random_bounds(rng, lp_n, rng.uniform(0, std::min(lp_n, 4))), true);
            const int swap_n = std::min(n, 7);
            for (; swap_n >= 4;) {
                DecoratedPermutation q = random_decorated_permutation(rng, swap_n);
                int a, b, i;
                if (!detail::find_swap_pattern(rng, q, a, b, i)) continue;
                detail::check_swap(swap, mirrored, q, a, b, i);
                break;
            }
        }
    }

    return {gale.finish(), schubert.finish(), bij.finish(),  dual.finish(), neck.finish(), fixed.finish(),
            tri.finish(),  full.finish(),     lp.finish(),   swap.finish(), mirrored.finish(), flag.finish(),
            matroid.finish()};
}

} // namespace positroid
