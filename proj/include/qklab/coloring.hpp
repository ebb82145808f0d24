#pragma once

#include <string>
#include <vector>

#include "qklab/digraph.hpp"

/// Proper colorings of the underlying graph of a digraph. An arc in either
/// direction counts as an edge, so a proper coloring separates x and y
/// whenever (x,y) or (y,x) is an arc.

namespace qklab {

/// Total vertex -> color map. Colors used always form the contiguous range
/// 0..color_count-1 (checked on construction).
class Coloring {
public:
    Coloring() = default;

    explicit Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
        int max_color = -1;
        for (int c : colors_) {
            if (c < 0) throw argument_error("colors must be non-negative");
            max_color = std::max(max_color, c);
        }
        color_count_ = max_color + 1;
        std::vector<char> used(static_cast<std::size_t>(color_count_), 0);
        for (int c : colors_) used[static_cast<std::size_t>(c)] = 1;
        for (int c = 0; c < color_count_; ++c)
            if (!used[static_cast<std::size_t>(c)])
                throw argument_error("color " + std::to_string(c) +
                                     " unused: colors must form a contiguous range");
    }

    int size() const { return static_cast<int>(colors_.size()); }
    int color_count() const { return color_count_; }

    int color(int v) const {
        if (v < 0 || v >= size())
            throw argument_error("coloring has no vertex " + std::to_string(v));
        return colors_[static_cast<std::size_t>(v)];
    }

    const std::vector<int>& colors() const { return colors_; }

    bool operator==(const Coloring&) const = default;

private:
    std::vector<int> colors_;
    int color_count_ = 0;
};

inline bool is_proper(const Digraph& d, const Coloring& c) {
    if (c.size() != d.vertex_count())
        throw argument_error("coloring covers " + std::to_string(c.size()) +
                             " vertices, digraph has " + std::to_string(d.vertex_count()));
    for (int x = 0; x < d.vertex_count(); ++x)
        for (int y : d.out_neighbors(x))
            if (c.color(x) == c.color(y)) return false;
    return true;
}

/// Greedy proper coloring of the underlying graph: vertices in ascending
/// index order, each taking the least color unused on its already-colored
/// underlying neighbors. Uses at most max-underlying-degree + 1 colors.
inline Coloring greedy_underlying_coloring(const Digraph& d) {
    const int n = d.vertex_count();
    if (n == 0) return Coloring();
    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    std::vector<char> blocked;
    for (int v = 0; v < n; ++v) {
        blocked.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int u : d.out_neighbors(v))
            if (colors[static_cast<std::size_t>(u)] >= 0)
                blocked[static_cast<std::size_t>(colors[static_cast<std::size_t>(u)])] = 1;
        for (int u : d.in_neighbors(v))
            if (colors[static_cast<std::size_t>(u)] >= 0)
                blocked[static_cast<std::size_t>(colors[static_cast<std::size_t>(u)])] = 1;
        int c = 0;
        while (blocked[static_cast<std::size_t>(c)]) ++c;
        colors[static_cast<std::size_t>(v)] = c;
    }
    return Coloring(colors);
}

/// Proper <= 3-coloring of a digraph generated by a single function, from
/// an independent recurrent base set: color 0 on the base, then 1 and 2
/// alternating by distance-layer parity. Each non-base vertex has exactly
/// one out-arc, so rho(x, base) = 1 + rho(f(x), base) and adjacent layers
/// always sit one apart.
inline Coloring three_color_single_function(const Digraph& d, const VertexSet& base) {
    detail::require_same_universe(d, base, "three_color_single_function");
    if (max_out_degree(d) > 1)
        throw precondition_error("three_color_single_function: out-degree exceeds 1");
    if (!is_independent(d, base))
        throw precondition_error("three_color_single_function: base set is not independent");
    const auto dist = distances_to(d, base);
    const int n = d.vertex_count();
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        if (dist[static_cast<std::size_t>(v)].is_infinite())
            throw precondition_error("three_color_single_function: base set is not recurrent");
        const int layer = dist[static_cast<std::size_t>(v)].value();
        colors[static_cast<std::size_t>(v)] = layer == 0 ? 0 : (layer % 2 == 1 ? 1 : 2);
    }
    return Coloring(colors);
}

}  // namespace qklab
