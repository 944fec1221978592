#pragma once

// Le-diagrams and their Le-graphs: boundary labels, the Le-property, cover
// relations and chains, vertex-disjoint path families, and reading the
// Grassmann necklace directly off a diagram.
//
// Cells are stored positionally: (row, col) with row 1 at the top and col 1
// at the left, both 1-based. Labels come from walking the boundary path from
// the upper right corner of the k x (n-k) rectangle to the lower left corner,
// numbering its steps 1..n. Row labels are the vertical steps, I(lambda);
// column labels increase from right to left.

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "positroid/necklace.hpp"

namespace positroid {

struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A box addressed by the labels of its row and column. row < col always.
struct LabeledCell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const LabeledCell&, const LabeledCell&) = default;
};

inline std::string to_string(const Cell& c)
{
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

inline std::string to_string(const LabeledCell& c)
{
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

struct BoundaryLabels {
    std::vector<int> row;  ///< row[r-1] = label of row r
    std::vector<int> col;  ///< col[c-1] = label of column c
    KSubset sources;       ///< I(lambda)
};

/// A partition lambda_1 >= ... >= lambda_k >= 0 inside the k x (n-k) rectangle.
class YoungShape {
public:
    YoungShape(int n, std::vector<int> rows) : n_(n), rows_(std::move(rows))
    {
        detail::check_ground_size(n);
        const int k = this->k();
        detail::require(k <= n, "shape has more rows than the ground size allows");
        for (int r = 0; r < k; ++r) {
            detail::require(rows_[r] >= 0 && rows_[r] <= n - k,
                            "row length " + std::to_string(rows_[r]) + " outside [0, "
                                + std::to_string(n - k) + "]");
            detail::require(r == 0 || rows_[r] <= rows_[r - 1], "row lengths are not weakly decreasing");
        }
        labels_ = walk();
    }

    int ground_size() const noexcept { return n_; }
    int k() const noexcept { return static_cast<int>(rows_.size()); }
    int width() const noexcept { return n_ - k(); }
    const std::vector<int>& rows() const noexcept { return rows_; }
    int row_length(int r) const { return rows_.at(static_cast<std::size_t>(r - 1)); }

    int column_height(int c) const
    {
        int h = 0;
        while (h < k() && rows_[h] >= c) ++h;
        return h;
    }

    bool has_box(Cell c) const noexcept
    {
        return c.row >= 1 && c.row <= k() && c.col >= 1 && c.col <= rows_[c.row - 1];
    }

    int box_count() const
    {
        int s = 0;
        for (int r : rows_) s += r;
        return s;
    }

    const BoundaryLabels& labels() const noexcept { return labels_; }

    LabeledCell label(Cell c) const { return {labels_.row.at(c.row - 1), labels_.col.at(c.col - 1)}; }

    /// Positional cell for a pair of labels, if both name a row and a column.
    std::optional<Cell> locate(LabeledCell lc) const
    {
        auto r = std::find(labels_.row.begin(), labels_.row.end(), lc.row);
        auto c = std::find(labels_.col.begin(), labels_.col.end(), lc.col);
        if (r == labels_.row.end() || c == labels_.col.end()) return std::nullopt;
        return Cell{static_cast<int>(r - labels_.row.begin()) + 1, static_cast<int>(c - labels_.col.begin()) + 1};
    }

    std::optional<int> row_of_label(int label) const
    {
        auto r = std::find(labels_.row.begin(), labels_.row.end(), label);
        if (r == labels_.row.end()) return std::nullopt;
        return static_cast<int>(r - labels_.row.begin()) + 1;
    }

    std::optional<int> col_of_label(int label) const
    {
        auto c = std::find(labels_.col.begin(), labels_.col.end(), label);
        if (c == labels_.col.end()) return std::nullopt;
        return static_cast<int>(c - labels_.col.begin()) + 1;
    }

    friend bool operator==(const YoungShape& a, const YoungShape& b) { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    BoundaryLabels walk() const
    {
        BoundaryLabels out{std::vector<int>(k()), std::vector<int>(width()), KSubset::from_mask(n_, 0)};
        int x = width();
        int label = 1;
        std::uint64_t sources = 0;
        for (int r = 1; r <= k(); ++r) {
            for (; x > rows_[r - 1]; --x) out.col[x - 1] = label++;
            out.row[r - 1] = label;
            sources |= std::uint64_t{1} << (label - 1);
            ++label;
        }
        for (; x > 0; --x) out.col[x - 1] = label++;
        out.sources = KSubset::from_mask(n_, sources);
        return out;
    }

    int n_;
    std::vector<int> rows_;
    BoundaryLabels labels_;
};

inline BoundaryLabels boundary_labels(const YoungShape& shape) { return shape.labels(); }

/// A shape with some of its boxes filled with dots. No Le-property implied.
class Filling {
public:
    Filling(YoungShape shape, const std::vector<Cell>& dots) : shape_(std::move(shape))
    {
        grid_.resize(shape_.k());
        for (int r = 1; r <= shape_.k(); ++r) grid_[r - 1].assign(shape_.row_length(r), false);
        for (Cell c : dots) {
            detail::require(shape_.has_box(c), "cell " + to_string(c) + " lies outside the shape");
            grid_[c.row - 1][c.col - 1] = true;
        }
    }

    const YoungShape& shape() const noexcept { return shape_; }

    bool filled(Cell c) const { return shape_.has_box(c) && grid_[c.row - 1][c.col - 1]; }

    std::vector<Cell> dots() const
    {
        std::vector<Cell> out;
        for (int r = 1; r <= shape_.k(); ++r)
            for (int c = 1; c <= shape_.row_length(r); ++c)
                if (grid_[r - 1][c - 1]) out.push_back({r, c});
        return out;
    }

    /// First box that the Le-property forces to be filled but is empty.
    std::optional<Cell> le_violation() const
    {
        for (int r = 1; r <= shape_.k(); ++r) {
            bool dot_left = false;
            for (int c = 1; c <= shape_.row_length(r); ++c) {
                if (!grid_[r - 1][c - 1] && dot_left && dot_above(r, c)) return Cell{r, c};
                dot_left = dot_left || grid_[r - 1][c - 1];
            }
        }
        return std::nullopt;
    }

    friend bool operator==(const Filling&, const Filling&) = default;

private:
    bool dot_above(int r, int c) const
    {
        for (int rr = 1; rr < r; ++rr)
            if (grid_[rr - 1][c - 1]) return true;
        return false;
    }

    YoungShape shape_;
    std::vector<std::vector<bool>> grid_;
};

/// If a box has a dot above it in its column and a dot to its left in its
/// row, it holds a dot itself.
inline bool is_le_diagram(const Filling& f) { return !f.le_violation().has_value(); }

class LeDiagram {
public:
    explicit LeDiagram(Filling f) : f_(std::move(f))
    {
        if (auto bad = f_.le_violation())
            throw input_error("Le-property violated: box " + to_string(*bad) + " has a dot above and a dot"
                              " to its left but is empty");
    }

    LeDiagram(YoungShape shape, const std::vector<Cell>& dots) : LeDiagram(Filling(std::move(shape), dots)) {}

    /// Every box filled.
    static LeDiagram full(const YoungShape& shape)
    {
        std::vector<Cell> dots;
        for (int r = 1; r <= shape.k(); ++r)
            for (int c = 1; c <= shape.row_length(r); ++c) dots.push_back({r, c});
        return LeDiagram(shape, dots);
    }

    const YoungShape& shape() const noexcept { return f_.shape(); }
    const Filling& filling() const noexcept { return f_; }
    int ground_size() const noexcept { return shape().ground_size(); }
    int rank() const noexcept { return shape().k(); }
    bool filled(Cell c) const { return f_.filled(c); }
    std::vector<Cell> dots() const { return f_.dots(); }

    friend bool operator==(const LeDiagram&, const LeDiagram&) = default;

private:
    Filling f_;
};

namespace detail {

/// The dot with the largest row index at most max_row and the largest column
/// index at most max_col, when the region holds any dot. The Le-property
/// makes the two maxima meet in a single dot.
inline std::optional<Cell> closest_dot(const LeDiagram& L, int max_row, int max_col)
{
    int best_row = 0;
    int best_col = 0;
    for (int r = 1; r <= max_row; ++r)
        for (int c = 1; c <= std::min(max_col, L.shape().row_length(r)); ++c)
            if (L.filled({r, c})) {
                best_row = std::max(best_row, r);
                best_col = std::max(best_col, c);
            }
    if (best_row == 0) return std::nullopt;
    ensure(L.filled({best_row, best_col}),
           "no unique closest dot below " + to_string(Cell{max_row, max_col}) + "; Le-property broken");
    return Cell{best_row, best_col};
}

} // namespace detail

/// The dot covering box `at`: the closest dot strictly above and strictly
/// to the left. Positional addressing.
inline std::optional<Cell> cover_dot(const LeDiagram& L, Cell at)
{
    detail::require(L.shape().has_box(at), "cell " + to_string(at) + " lies outside the shape");
    return detail::closest_dot(L, at.row - 1, at.col - 1);
}

/// Label-addressed form of cover_dot.
inline std::optional<LabeledCell> cover_dot(const LeDiagram& L, LabeledCell at)
{
    auto pos = L.shape().locate(at);
    detail::require(pos && L.shape().has_box(*pos), "no box at labels " + to_string(at));
    auto d = cover_dot(L, *pos);
    if (!d) return std::nullopt;
    return L.shape().label(*d);
}

/// Chain rooted at a box, listed from the dot nearest the root outward,
/// i.e. (x_1, y_1), (x_2, y_2), ... with each entry covering the previous.
inline std::vector<Cell> chain_rooted_at(const LeDiagram& L, Cell at)
{
    detail::require(L.shape().has_box(at), "cell " + to_string(at) + " lies outside the shape");
    std::vector<Cell> chain;
    for (auto d = detail::closest_dot(L, at.row, at.col); d; d = cover_dot(L, *d)) chain.push_back(*d);
    return chain;
}

inline std::vector<LabeledCell> chain_rooted_at(const LeDiagram& L, LabeledCell at)
{
    auto pos = L.shape().locate(at);
    detail::require(pos && L.shape().has_box(*pos), "no box at labels " + to_string(at));
    std::vector<LabeledCell> out;
    for (Cell c : chain_rooted_at(L, *pos)) out.push_back(L.shape().label(c));
    return out;
}

/// Directed network on the boundary vertices 1..n and the dots. Horizontal
/// edges run leftward, vertical edges downward; a horizontal and a vertical
/// line crossing at an empty box do not meet.
class LeGraph {
public:
    explicit LeGraph(const LeDiagram& L) : n_(L.ground_size())
    {
        const YoungShape& shape = L.shape();
        const auto& lab = shape.labels();
        dots_ = L.dots();
        auto id = [&](Cell c) {
            return n_ + static_cast<int>(std::lower_bound(dots_.begin(), dots_.end(), c) - dots_.begin());
        };
        out_.assign(n_ + dots_.size(), {});
        for (int r = 1; r <= shape.k(); ++r) {
            int prev = lab.row[r - 1] - 1;  // boundary vertex at the right end of the row
            for (int c = shape.row_length(r); c >= 1; --c)
                if (L.filled({r, c})) {
                    out_[prev].push_back(id({r, c}));
                    prev = id({r, c});
                }
        }
        for (int c = 1; c <= shape.width(); ++c) {
            int prev = -1;
            for (int r = 1; r <= shape.column_height(c); ++r)
                if (L.filled({r, c})) {
                    if (prev >= 0) out_[prev].push_back(id({r, c}));
                    prev = id({r, c});
                }
            if (prev >= 0) out_[prev].push_back(lab.col[c - 1] - 1);
        }
        for (auto& v : out_) std::sort(v.begin(), v.end());
    }

    int ground_size() const noexcept { return n_; }
    int vertex_count() const noexcept { return static_cast<int>(out_.size()); }
    const std::vector<Cell>& dots() const noexcept { return dots_; }

    /// Vertex ids: boundary vertex b is b-1; dot i of dots() is n+i.
    const std::vector<int>& successors(int v) const { return out_.at(v); }

    /// Maximum number of vertex-disjoint paths from `from` to `to`.
    int disjoint_paths(const KSubset& from, const KSubset& to) const
    {
        // Vertex v splits into in = 2v and out = 2v+1 joined by a unit arc.
        const int V = vertex_count();
        const int S = 2 * V;
        const int T = S + 1;
        struct Arc {
            int to;
            int cap;
        };
        std::vector<Arc> arcs;
        std::vector<std::vector<int>> adj(2 * V + 2);
        auto add = [&](int a, int b) {
            adj[a].push_back(static_cast<int>(arcs.size()));
            arcs.push_back({b, 1});
            adj[b].push_back(static_cast<int>(arcs.size()));
            arcs.push_back({a, 0});
        };
        for (int v = 0; v < V; ++v) {
            add(2 * v, 2 * v + 1);
            for (int w : out_[v]) add(2 * v + 1, 2 * w);
        }
        for (int e : from.elements()) add(S, 2 * (e - 1));
        for (int e : to.elements()) add(2 * (e - 1) + 1, T);

        std::vector<char> seen;
        std::function<bool(int)> augment = [&](int u) {
            if (u == T) return true;
            seen[u] = 1;
            for (int a : adj[u]) {
                if (arcs[a].cap == 0 || seen[arcs[a].to]) continue;
                if (augment(arcs[a].to)) {
                    --arcs[a].cap;
                    ++arcs[a ^ 1].cap;
                    return true;
                }
            }
            return false;
        };
        int flow = 0;
        for (;;) {
            seen.assign(adj.size(), 0);
            if (!augment(S)) break;
            ++flow;
        }
        return flow;
    }

private:
    int n_;
    std::vector<Cell> dots_;
    std::vector<std::vector<int>> out_;
};

inline bool vd_representable(const LeGraph& g, const KSubset& sources, const KSubset& j)
{
    detail::require(j.ground_size() == sources.ground_size() && j.size() == sources.size(),
                    "subset " + j.to_string() + " does not match the diagram's ground size and rank");
    const KSubset from = sources - j;
    return g.disjoint_paths(from, j - sources) == from.size();
}

/// Whether J is represented by a family of vertex-disjoint paths in the
/// Le-graph, joining I(lambda) \ J to J \ I(lambda).
inline bool vd_representable(const LeDiagram& L, const KSubset& j)
{
    return vd_representable(LeGraph(L), L.shape().labels().sources, j);
}

/// The positroid of L: every J represented by a vertex-disjoint family.
inline BasisCollection enumerate_bases(const LeDiagram& L)
{
    const LeGraph g(L);
    const KSubset& sources = L.shape().labels().sources;
    return BasisCollection::filtered(L.ground_size(), L.rank(),
                                     [&](const KSubset& j) { return vd_representable(g, sources, j); });
}

namespace detail {

/// Vertices of the hook path turning at dot d: boundary row vertex, the dots
/// of d's row from the right end up to d, the dots of d's column from d
/// down, and the boundary column vertex.
inline std::vector<int> hook_path_vertices(const LeDiagram& L, Cell d)
{
    const YoungShape& shape = L.shape();
    std::vector<int> v{shape.label(d).row, shape.label(d).col};
    const int n = L.ground_size();
    auto dot_id = [&](Cell c) { return n + (c.row - 1) * n + c.col; };
    for (int c = d.col; c <= shape.row_length(d.row); ++c)
        if (L.filled({d.row, c})) v.push_back(dot_id({d.row, c}));
    for (int r = d.row + 1; r <= shape.column_height(d.col); ++r)
        if (L.filled({r, d.col})) v.push_back(dot_id({r, d.col}));
    std::sort(v.begin(), v.end());
    return v;
}

inline void check_hook_paths_disjoint(const LeDiagram& L, const std::vector<Cell>& chain)
{
    std::vector<int> all;
    for (Cell d : chain) {
        auto v = hook_path_vertices(L, d);
        all.insert(all.end(), v.begin(), v.end());
    }
    std::sort(all.begin(), all.end());
    ensure(std::adjacent_find(all.begin(), all.end()) == all.end(), "hook paths of a chain share a vertex");
}

} // namespace detail

/// I(lambda) with the chain's row labels swapped for its column labels.
inline KSubset chain_subset(const LeDiagram& L, const std::vector<Cell>& chain)
{
    KSubset out = L.shape().labels().sources;
    for (Cell c : chain) {
        LabeledCell lc = L.shape().label(c);
        out = out.without(lc.row).with(lc.col);
    }
    return out;
}

/// The Grassmann necklace of the positroid of L, read from chains.
inline GrassmannNecklace necklace_from_le(const LeDiagram& L)
{
    const YoungShape& shape = L.shape();
    const int n = L.ground_size();
    const KSubset& sources = shape.labels().sources;
    std::vector<KSubset> entries{sources};
    for (int j = 2; j <= n; ++j) {
        std::optional<Cell> root;
        if (auto c = shape.col_of_label(j)) {
            // Bottom box of column j.
            if (int h = shape.column_height(*c); h > 0) root = Cell{h, *c};
        } else if (auto r = shape.row_of_label(j)) {
            // Box above the rightmost box of row j.
            if (int len = shape.row_length(*r); len > 0 && *r > 1) root = Cell{*r - 1, len};
        }
        if (!root) {
            entries.push_back(sources);
            continue;
        }
        auto chain = chain_rooted_at(L, *root);
        detail::check_hook_paths_disjoint(L, chain);
        entries.push_back(chain_subset(L, chain));
    }
    return GrassmannNecklace(std::move(entries));
}

/// Calls f(shape) for every partition inside the k x (n-k) rectangle.
template <typename F>
void for_each_shape(int n, int k, F&& f)
{
    detail::check_ground_size(n);
    detail::require(k >= 0 && k <= n, "rank outside [0, n]");
    std::vector<int> rows(k);
    std::function<void(int, int)> rec = [&](int r, int bound) {
        if (r == k) {
            f(YoungShape(n, rows));
            return;
        }
        for (int len = bound; len >= 0; --len) {
            rows[r] = len;
            rec(r + 1, len);
        }
    };
    rec(0, n - k);
}

/// Calls f(diagram) for every Le-filling of shape, by depth-first search in
/// row-major order that never leaves a forced box empty.
template <typename F>
void for_each_le_diagram(const YoungShape& shape, F&& f)
{
    std::vector<Cell> boxes;
    for (int r = 1; r <= shape.k(); ++r)
        for (int c = 1; c <= shape.row_length(r); ++c) boxes.push_back({r, c});
    std::vector<std::vector<char>> grid(shape.k());
    for (int r = 0; r < shape.k(); ++r) grid[r].assign(shape.rows()[r], 0);

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == boxes.size()) {
            std::vector<Cell> dots;
            for (Cell b : boxes)
                if (grid[b.row - 1][b.col - 1]) dots.push_back(b);
            f(LeDiagram(shape, dots));
            return;
        }
        const Cell b = boxes[idx];
        bool dot_left = false;
        for (int c = 1; c < b.col; ++c) dot_left = dot_left || grid[b.row - 1][c - 1];
        bool dot_above = false;
        for (int r = 1; r < b.row; ++r) dot_above = dot_above || grid[r - 1][b.col - 1];
        if (!(dot_left && dot_above)) rec(idx + 1);
        grid[b.row - 1][b.col - 1] = 1;
        rec(idx + 1);
        grid[b.row - 1][b.col - 1] = 0;
    };
    rec(0);
}

} // namespace positroid
