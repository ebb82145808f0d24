#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qklab/digraph.hpp"

/// Exhaustive ground truth at small scale: exact chromatic number, minimum
/// quasi-kernels, kernel existence, minimum out-domination and exact edge
/// chromatic number. Deliberately independent of the constructive modules:
/// only digraph.hpp is shared, so certification is never circular.

namespace qklab {

inline constexpr int default_oracle_limit = 24;
inline constexpr int oracle_engine_cap = 64;  // bitmask width of the search engines

struct OracleResult {
    int value = 0;
    VertexSet witness;
};

namespace detail {

inline void check_oracle_size(int size, int limit, const char* what) {
    if (size > limit)
        throw resource_error(std::string(what) + ": size " + std::to_string(size) +
                             " exceeds the oracle limit " + std::to_string(limit));
    if (size > oracle_engine_cap)
        throw resource_error(std::string(what) + ": size " + std::to_string(size) +
                             " exceeds the 64-bit search engine cap");
}

inline std::vector<std::uint64_t> underlying_masks(const Digraph& d) {
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(d.vertex_count()), 0);
    for (int x = 0; x < d.vertex_count(); ++x)
        for (int y : d.out_neighbors(x)) {
            masks[static_cast<std::size_t>(x)] |= std::uint64_t{1} << y;
            masks[static_cast<std::size_t>(y)] |= std::uint64_t{1} << x;
        }
    return masks;
}

/// Branch and bound for the chromatic number of an adjacency-mask graph:
/// saturation-first vertex order, greedy result as the initial upper
/// bound, new colors only in canonical position.
class ChromaticSearch {
public:
    explicit ChromaticSearch(std::vector<std::uint64_t> adjacency)
        : adj_(std::move(adjacency)), n_(static_cast<int>(adj_.size())) {}

    int run() {
        if (n_ == 0) return 0;
        best_ = greedy_bound();
        color_.assign(static_cast<std::size_t>(n_), -1);
        neighbor_colors_.assign(static_cast<std::size_t>(n_), 0);
        counts_.assign(static_cast<std::size_t>(n_), {});
        descend(0, 0);
        return best_;
    }

private:
    int greedy_bound() const {
        std::vector<int> color(static_cast<std::size_t>(n_), -1);
        int used = 0;
        for (int v = 0; v < n_; ++v) {
            std::uint64_t blocked = 0;
            std::uint64_t rest = adj_[static_cast<std::size_t>(v)];
            while (rest) {
                const int u = std::countr_zero(rest);
                rest &= rest - 1;
                if (color[static_cast<std::size_t>(u)] >= 0)
                    blocked |= std::uint64_t{1} << color[static_cast<std::size_t>(u)];
            }
            const int c = std::countr_zero(~blocked);
            color[static_cast<std::size_t>(v)] = c;
            used = std::max(used, c + 1);
        }
        return used;
    }

    void descend(int colored, int used) {
        if (used >= best_) return;
        if (colored == n_) {
            best_ = used;
            return;
        }
        const int v = pick_vertex();
        for (int c = 0; c <= used; ++c) {
            if (c == used && used + 1 >= best_) break;
            if ((neighbor_colors_[static_cast<std::size_t>(v)] >> c) & 1) continue;
            assign(v, c);
            descend(colored + 1, std::max(used, c + 1));
            unassign(v, c);
        }
    }

    int pick_vertex() const {
        int best_v = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[static_cast<std::size_t>(v)] >= 0) continue;
            const int sat = std::popcount(neighbor_colors_[static_cast<std::size_t>(v)]);
            const int deg = std::popcount(adj_[static_cast<std::size_t>(v)]);
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
                best_v = v;
                best_sat = sat;
                best_deg = deg;
            }
        }
        return best_v;
    }

    void assign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = c;
        std::uint64_t rest = adj_[static_cast<std::size_t>(v)];
        while (rest) {
            const int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (++counts_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] == 1)
                neighbor_colors_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << c;
        }
    }

    void unassign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = -1;
        std::uint64_t rest = adj_[static_cast<std::size_t>(v)];
        while (rest) {
            const int u = std::countr_zero(rest);
            rest &= rest - 1;
            if (--counts_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] == 0)
                neighbor_colors_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << c);
        }
    }

    std::vector<std::uint64_t> adj_;
    int n_;
    int best_ = 0;
    std::vector<int> color_;
    std::vector<std::uint64_t> neighbor_colors_;
    std::vector<std::array<std::uint16_t, oracle_engine_cap>> counts_;
};

/// Cardinality-ascending subset search in lexicographic order, so the
/// first hit is a minimum of least witness. `cover[v]` holds the vertices
/// that reach v within the allowed gap; `conflict[v]` blocks underlying
/// neighbors when independence is required.
class SubsetSearch {
public:
    SubsetSearch(int n, std::vector<std::uint64_t> cover, std::vector<std::uint64_t> conflict)
        : n_(n), cover_(std::move(cover)), conflict_(std::move(conflict)) {
        full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        suffix_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (int v = n_ - 1; v >= 0; --v)
            suffix_[static_cast<std::size_t>(v)] =
                suffix_[static_cast<std::size_t>(v) + 1] | cover_[static_cast<std::size_t>(v)];
        for (const auto m : cover_) max_cover_ = std::max(max_cover_, std::popcount(m));
    }

    std::optional<std::vector<int>> minimum() {
        for (int k = 0; k <= n_; ++k) {
            chosen_.clear();
            if (descend(0, k, 0, 0)) return chosen_;
        }
        return std::nullopt;
    }

private:
    bool descend(int start, int remaining, std::uint64_t covered, std::uint64_t blocked) {
        if (covered == full_ && remaining == 0) return true;
        if (remaining == 0) return false;
        if (max_cover_ * remaining < std::popcount(full_ & ~covered)) return false;
        for (int v = start; v < n_; ++v) {
            if ((covered | suffix_[static_cast<std::size_t>(v)]) != full_) break;
            if ((blocked >> v) & 1) continue;
            chosen_.push_back(v);
            if (descend(v + 1, remaining - 1, covered | cover_[static_cast<std::size_t>(v)],
                        blocked | conflict_[static_cast<std::size_t>(v)]))
                return true;
            chosen_.pop_back();
        }
        return false;
    }

    int n_;
    std::vector<std::uint64_t> cover_;
    std::vector<std::uint64_t> conflict_;
    std::vector<std::uint64_t> suffix_;
    std::uint64_t full_ = 0;
    int max_cover_ = 0;
    std::vector<int> chosen_;
};

inline std::vector<std::uint64_t> reach_within_one(const Digraph& d) {
    std::vector<std::uint64_t> cover(static_cast<std::size_t>(d.vertex_count()), 0);
    for (int v = 0; v < d.vertex_count(); ++v) {
        cover[static_cast<std::size_t>(v)] = std::uint64_t{1} << v;
        for (int u : d.in_neighbors(v)) cover[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return cover;
}

inline std::vector<std::uint64_t> reach_within_two(const Digraph& d) {
    auto cover = reach_within_one(d);
    std::vector<std::uint64_t> in_mask(static_cast<std::size_t>(d.vertex_count()), 0);
    for (int v = 0; v < d.vertex_count(); ++v)
        for (int u : d.in_neighbors(v)) in_mask[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    for (int v = 0; v < d.vertex_count(); ++v)
        for (int u : d.in_neighbors(v))
            cover[static_cast<std::size_t>(v)] |= in_mask[static_cast<std::size_t>(u)];
    return cover;
}

inline VertexSet to_vertex_set(int n, const std::vector<int>& members) {
    VertexSet s(n);
    for (int v : members) s.insert(v);
    return s;
}

}  // namespace detail

/// Exact chromatic number of the underlying graph.
inline int exact_chromatic(const Digraph& d, int limit = default_oracle_limit) {
    detail::check_oracle_size(d.vertex_count(), limit, "exact_chromatic");
    return detail::ChromaticSearch(detail::underlying_masks(d)).run();
}

/// Minimum independent set with recurrence gap <= 2. Always exists.
inline OracleResult min_quasi_kernel(const Digraph& d, int limit = default_oracle_limit) {
    detail::check_oracle_size(d.vertex_count(), limit, "min_quasi_kernel");
    detail::SubsetSearch search(d.vertex_count(), detail::reach_within_two(d),
                                detail::underlying_masks(d));
    const auto hit = search.minimum();
    if (!hit) throw error("internal: no quasi-kernel found by exhaustive search");
    return {static_cast<int>(hit->size()), detail::to_vertex_set(d.vertex_count(), *hit)};
}

/// Some kernel (independent, gap <= 1) if one exists.
inline std::optional<VertexSet> kernel_search(const Digraph& d, int limit = default_oracle_limit) {
    detail::check_oracle_size(d.vertex_count(), limit, "kernel_search");
    detail::SubsetSearch search(d.vertex_count(), detail::reach_within_one(d),
                                detail::underlying_masks(d));
    const auto hit = search.minimum();
    if (!hit) return std::nullopt;
    return detail::to_vertex_set(d.vertex_count(), *hit);
}

/// Minimum set M with rho(x, M) <= 1 for every x; independence not required.
inline OracleResult min_out_domination(const Digraph& d, int limit = default_oracle_limit) {
    detail::check_oracle_size(d.vertex_count(), limit, "min_out_domination");
    detail::SubsetSearch search(
        d.vertex_count(), detail::reach_within_one(d),
        std::vector<std::uint64_t>(static_cast<std::size_t>(d.vertex_count()), 0));
    const auto hit = search.minimum();
    if (!hit) throw error("internal: the full vertex set must dominate");
    return {static_cast<int>(hit->size()), detail::to_vertex_set(d.vertex_count(), *hit)};
}

/// Exact chromatic index of the underlying graph, by running the chromatic
/// search on the line graph.
inline int edge_chromatic(const Digraph& d, int limit = default_oracle_limit) {
    detail::check_oracle_size(d.vertex_count(), limit, "edge_chromatic");
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < d.vertex_count(); ++x)
        for (int y : d.out_neighbors(x))
            if (x < y || !d.has_arc(y, x)) edges.emplace_back(std::min(x, y), std::max(x, y));
    const int m = static_cast<int>(edges.size());
    if (m > oracle_engine_cap)
        throw resource_error("edge_chromatic: " + std::to_string(m) +
                             " underlying edges exceed the 64-bit search engine cap");
    std::vector<std::uint64_t> line(static_cast<std::size_t>(m), 0);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            const bool touch = edges[static_cast<std::size_t>(a)].first == edges[static_cast<std::size_t>(b)].first ||
                               edges[static_cast<std::size_t>(a)].first == edges[static_cast<std::size_t>(b)].second ||
                               edges[static_cast<std::size_t>(a)].second == edges[static_cast<std::size_t>(b)].first ||
                               edges[static_cast<std::size_t>(a)].second == edges[static_cast<std::size_t>(b)].second;
            if (touch) {
                line[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
                line[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
            }
        }
    return detail::ChromaticSearch(std::move(line)).run();
}

}  // namespace qklab
