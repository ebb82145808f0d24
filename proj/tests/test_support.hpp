#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qklab/digraph.hpp"
#include "qklab/generators.hpp"

// Test-only helpers: small corpus generators and brute-force reference
// oracles kept deliberately naive and independent of the library's search
// code, so they can certify it.

namespace qktest {

inline constexpr int kUnreachable = 1 << 20;

inline qklab::Digraph random_digraph(qklab::SplitMix64& rng, int max_vertices, int max_out) {
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_vertices)));
    std::vector<std::pair<int, int>> arcs;
    for (int x = 0; x < n; ++x) {
        const int cap = std::min(max_out, n - 1);
        const int degree = cap == 0 ? 0 : static_cast<int>(rng.below(static_cast<std::uint32_t>(cap + 1)));
        std::vector<char> taken(static_cast<std::size_t>(n), 0);
        for (int picked = 0; picked < degree;) {
            const int y = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
            if (y == x || taken[static_cast<std::size_t>(y)]) continue;
            taken[static_cast<std::size_t>(y)] = 1;
            arcs.emplace_back(x, y);
            ++picked;
        }
    }
    return qklab::Digraph(n, arcs);
}

/// All ordered pairs (x, y), x != y, in a fixed order, so that every
/// loop-free digraph on n vertices is digraph_from_mask(n, mask) for
/// exactly one mask below 2^(n(n-1)).
inline std::vector<std::pair<int, int>> ordered_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) pairs.emplace_back(x, y);
    return pairs;
}

inline qklab::Digraph digraph_from_mask(int n, std::uint64_t mask) {
    const auto pairs = ordered_pairs(n);
    std::vector<std::pair<int, int>> arcs;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1) arcs.push_back(pairs[i]);
    return qklab::Digraph(n, arcs);
}

/// All-pairs directed distances by Floyd-Warshall (min-plus), an
/// independent route to rho.
inline std::vector<std::vector<int>> all_pairs_distances(const qklab::Digraph& d) {
    const int n = d.vertex_count();
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), kUnreachable));
    for (int v = 0; v < n; ++v) dist[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
    for (const auto& [x, y] : d.arcs()) dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::min(
                    dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                    dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                        dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
    return dist;
}

inline int set_distance(const std::vector<std::vector<int>>& dist, int x,
                        const std::vector<int>& targets) {
    int best = kUnreachable;
    for (int y : targets)
        best = std::min(best, dist[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
    return best;
}

inline bool brute_independent(const qklab::Digraph& d, const std::vector<int>& members) {
    for (int x : members)
        for (int y : members)
            if (x != y && d.has_arc(x, y)) return false;
    return true;
}

/// Largest rho(x, members) over all x, kUnreachable when some x is stuck.
inline int brute_gap(const qklab::Digraph& d, const std::vector<int>& members) {
    const auto dist = all_pairs_distances(d);
    int gap = 0;
    for (int x = 0; x < d.vertex_count(); ++x) {
        const int dx = set_distance(dist, x, members);
        if (dx >= kUnreachable) return kUnreachable;
        gap = std::max(gap, dx);
    }
    return gap;
}

inline std::vector<int> mask_members(int n, std::uint32_t mask) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1) out.push_back(v);
    return out;
}

/// Minimum set with gap <= max_gap over all 2^n subsets, optionally
/// independent; witness is the lexicographically least among the smallest.
inline std::optional<std::pair<int, std::vector<int>>> brute_min_recurrent(
    const qklab::Digraph& d, int max_gap, bool require_independent) {
    const int n = d.vertex_count();
    std::optional<std::pair<int, std::vector<int>>> best;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        const auto members = mask_members(n, mask);
        if (require_independent && !brute_independent(d, members)) continue;
        if (brute_gap(d, members) > max_gap) continue;
        std::pair<int, std::vector<int>> candidate{static_cast<int>(members.size()), members};
        if (!best || candidate < *best) best = candidate;
    }
    return best;
}

/// k-colorability of the underlying graph by plain backtracking.
inline bool brute_colorable(const qklab::Digraph& d, int k) {
    const int n = d.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    auto conflict = [&](int v) {
        for (int u : d.out_neighbors(v))
            if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) return true;
        for (int u : d.in_neighbors(v))
            if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) return true;
        return false;
    };
    auto rec = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int c = 0; c < k; ++c) {
            color[static_cast<std::size_t>(v)] = c;
            if (!conflict(v) && self(self, v + 1)) return true;
        }
        color[static_cast<std::size_t>(v)] = -1;
        return false;
    };
    return rec(rec, 0);
}

inline int brute_chromatic(const qklab::Digraph& d) {
    if (d.vertex_count() == 0) return 0;
    for (int k = 1;; ++k)
        if (brute_colorable(d, k)) return k;
}

inline std::vector<std::pair<int, int>> underlying_edges(const qklab::Digraph& d) {
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < d.vertex_count(); ++x)
        for (int y : d.out_neighbors(x))
            if (x < y || !d.has_arc(y, x)) edges.emplace_back(std::min(x, y), std::max(x, y));
    std::sort(edges.begin(), edges.end());
    return edges;
}

inline bool brute_edge_colorable(const std::vector<std::pair<int, int>>& edges, int k) {
    std::vector<int> color(edges.size(), -1);
    auto rec = [&](auto&& self, std::size_t e) -> bool {
        if (e == edges.size()) return true;
        for (int c = 0; c < k; ++c) {
            bool clash = false;
            for (std::size_t f = 0; f < e && !clash; ++f)
                clash = color[f] == c && (edges[f].first == edges[e].first ||
                                          edges[f].first == edges[e].second ||
                                          edges[f].second == edges[e].first ||
                                          edges[f].second == edges[e].second);
            if (clash) continue;
            color[e] = c;
            if (self(self, e + 1)) return true;
            color[e] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

inline int brute_edge_chromatic(const qklab::Digraph& d) {
    const auto edges = underlying_edges(d);
    if (edges.empty()) return 0;
    for (int k = 1;; ++k)
        if (brute_edge_colorable(edges, k)) return k;
}

/// Existence of an odd directed cycle by enumerating simple cycles.
inline bool brute_has_odd_dicycle(const qklab::Digraph& d) {
    const int n = d.vertex_count();
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    bool found = false;
    auto rec = [&](auto&& self, int start, int v, int length) -> void {
        if (found) return;
        on_path[static_cast<std::size_t>(v)] = 1;
        for (int u : d.out_neighbors(v)) {
            if (u == start && length % 2 == 0) {  // closing arc makes length+1 odd
                found = true;
                break;
            }
            if (u > start && !on_path[static_cast<std::size_t>(u)]) self(self, start, u, length + 1);
        }
        on_path[static_cast<std::size_t>(v)] = 0;
    };
    for (int start = 0; start < n && !found; ++start) rec(rec, start, start, 0);
    return found;
}

}  // namespace qktest
