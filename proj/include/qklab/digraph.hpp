#pragma once

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/// Core directed-graph vocabulary: loop-free digraphs on dense integer
/// vertices, vertex subsets with bitset semantics, directed distances,
/// independence and recurrence predicates.

namespace qklab {

class error : public std::runtime_error {
public:
    explicit error(const std::string& message) : std::runtime_error(message) {}
};

/// Malformed value handed to a constructor or operation.
class argument_error : public error {
public:
    using error::error;
};

/// A stated precondition does not hold. May carry a witness, e.g. the
/// vertices of an odd directed cycle.
class precondition_error : public error {
public:
    explicit precondition_error(const std::string& message, std::vector<int> witness = {})
        : error(message), witness_(std::move(witness)) {}

    const std::vector<int>& witness() const { return witness_; }

private:
    std::vector<int> witness_;
};

/// An exact search was asked to run beyond its configured size limit.
class resource_error : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

/// Directed distance: a non-negative arc count, or infinite when no
/// directed path exists (the infimum over an empty set of paths).
class Distance {
public:
    constexpr Distance() = default;  // infinite

    static constexpr Distance infinite() { return Distance(); }

    static constexpr Distance finite(int value) {
        Distance d;
        d.value_ = value;
        return d;
    }

    constexpr bool is_finite() const { return value_ >= 0; }
    constexpr bool is_infinite() const { return value_ < 0; }

    int value() const {
        if (is_infinite()) throw error("value() called on an infinite distance");
        return value_;
    }

    /// True when finite and <= bound.
    constexpr bool at_most(int bound) const { return is_finite() && value_ <= bound; }

    friend constexpr bool operator==(Distance a, Distance b) = default;

    /// Total order with infinite above every finite distance.
    friend constexpr bool operator<(Distance a, Distance b) {
        if (b.is_infinite()) return a.is_finite();
        return a.is_finite() && a.value_ < b.value_;
    }
    friend constexpr bool operator<=(Distance a, Distance b) { return a < b || a == b; }
    friend constexpr bool operator>(Distance a, Distance b) { return b < a; }
    friend constexpr bool operator>=(Distance a, Distance b) { return b <= a; }

private:
    int value_ = -1;
};

/// Subset of the vertices 0..universe_size-1, stored densely.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe_size) {
        if (universe_size < 0) throw argument_error("vertex set universe must be non-negative");
        bits_.assign(static_cast<std::size_t>(universe_size), false);
    }

    VertexSet(int universe_size, const std::vector<int>& members) : VertexSet(universe_size) {
        for (int v : members) insert(v);
    }

    VertexSet(int universe_size, std::initializer_list<int> members)
        : VertexSet(universe_size, std::vector<int>(members)) {}

    static VertexSet all(int universe_size) {
        VertexSet s(universe_size);
        s.bits_.assign(s.bits_.size(), true);
        return s;
    }

    int universe_size() const { return static_cast<int>(bits_.size()); }

    int count() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), true)); }

    bool empty() const { return std::find(bits_.begin(), bits_.end(), true) == bits_.end(); }

    bool contains(int v) const {
        return v >= 0 && v < universe_size() && bits_[static_cast<std::size_t>(v)];
    }

    void insert(int v) {
        check_range(v);
        bits_[static_cast<std::size_t>(v)] = true;
    }

    void erase(int v) {
        check_range(v);
        bits_[static_cast<std::size_t>(v)] = false;
    }

    /// Members in ascending order.
    std::vector<int> members() const {
        std::vector<int> out;
        for (int v = 0; v < universe_size(); ++v)
            if (bits_[static_cast<std::size_t>(v)]) out.push_back(v);
        return out;
    }

    VertexSet complement() const {
        VertexSet s(*this);
        s.bits_.flip();
        return s;
    }

    VertexSet& operator|=(const VertexSet& other) {
        check_universe(other);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (other.bits_[i]) bits_[i] = true;
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other) {
        check_universe(other);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (!other.bits_[i]) bits_[i] = false;
        return *this;
    }

    VertexSet& operator-=(const VertexSet& other) {
        check_universe(other);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (other.bits_[i]) bits_[i] = false;
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet&) const = default;

private:
    void check_range(int v) const {
        if (v < 0 || v >= universe_size())
            throw argument_error("vertex " + std::to_string(v) + " outside universe of size " +
                                 std::to_string(universe_size()));
    }

    void check_universe(const VertexSet& other) const {
        if (other.universe_size() != universe_size())
            throw argument_error("vertex sets live in different universes");
    }

    std::vector<bool> bits_;
};

/// Finite loop-free digraph on vertices 0..n-1. The arc set is a relation:
/// duplicate arcs collapse on construction, and the out- and in-adjacency
/// lists stay sorted ascending and mutually transposed.
class Digraph {
public:
    Digraph() = default;

    Digraph(int vertex_count, const std::vector<std::pair<int, int>>& arc_list) {
        if (vertex_count < 0) throw argument_error("vertex_count must be non-negative");
        out_.resize(static_cast<std::size_t>(vertex_count));
        in_.resize(static_cast<std::size_t>(vertex_count));
        for (const auto& [x, y] : arc_list) {
            if (x < 0 || x >= vertex_count || y < 0 || y >= vertex_count)
                throw argument_error("arc (" + std::to_string(x) + ", " + std::to_string(y) +
                                     ") has an endpoint outside 0.." + std::to_string(vertex_count - 1));
            if (x == y)
                throw argument_error("self-loop (" + std::to_string(x) + ", " + std::to_string(x) +
                                     ") rejected: the arc relation is non-reflexive");
            out_[static_cast<std::size_t>(x)].push_back(y);
        }
        for (auto& nbrs : out_) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
            arc_count_ += static_cast<int>(nbrs.size());
        }
        for (int x = 0; x < vertex_count; ++x)
            for (int y : out_[static_cast<std::size_t>(x)])
                in_[static_cast<std::size_t>(y)].push_back(x);  // x ascending keeps in_ sorted
    }

    int vertex_count() const { return static_cast<int>(out_.size()); }
    int arc_count() const { return arc_count_; }

    const std::vector<int>& out_neighbors(int v) const {
        check_vertex(v);
        return out_[static_cast<std::size_t>(v)];
    }

    const std::vector<int>& in_neighbors(int v) const {
        check_vertex(v);
        return in_[static_cast<std::size_t>(v)];
    }

    int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
    int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }

    bool has_arc(int from, int to) const {
        const auto& nbrs = out_neighbors(from);
        check_vertex(to);
        return std::binary_search(nbrs.begin(), nbrs.end(), to);
    }

    /// All arcs in lexicographic order.
    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(arc_count_));
        for (int x = 0; x < vertex_count(); ++x)
            for (int y : out_[static_cast<std::size_t>(x)]) out.emplace_back(x, y);
        return out;
    }

    bool operator==(const Digraph&) const = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= vertex_count())
            throw argument_error("vertex " + std::to_string(v) + " outside 0.." +
                                 std::to_string(vertex_count() - 1));
    }

    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    int arc_count_ = 0;
};

namespace detail {

inline void require_same_universe(const Digraph& d, const VertexSet& s, const char* what) {
    if (s.universe_size() != d.vertex_count())
        throw argument_error(std::string(what) + ": vertex set universe " +
                             std::to_string(s.universe_size()) + " does not match vertex count " +
                             std::to_string(d.vertex_count()));
}

}  // namespace detail

inline int max_out_degree(const Digraph& d) {
    int best = 0;
    for (int v = 0; v < d.vertex_count(); ++v) best = std::max(best, d.out_degree(v));
    return best;
}

/// rho(x, targets) for every vertex x at once, by reverse breadth-first
/// search from the target set along in-arcs. Empty targets give infinity
/// everywhere (infimum over an empty set).
inline std::vector<Distance> distances_to(const Digraph& d, const VertexSet& targets) {
    detail::require_same_universe(d, targets, "distances_to");
    const int n = d.vertex_count();
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> frontier = targets.members();
    for (int v : frontier) dist[static_cast<std::size_t>(v)] = 0;
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        std::vector<int> next;
        for (int v : frontier)
            for (int u : d.in_neighbors(v))
                if (dist[static_cast<std::size_t>(u)] < 0) {
                    dist[static_cast<std::size_t>(u)] = level;
                    next.push_back(u);
                }
        frontier = std::move(next);
    }
    std::vector<Distance> out(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        out[static_cast<std::size_t>(v)] =
            dist[static_cast<std::size_t>(v)] < 0 ? Distance::infinite()
                                                  : Distance::finite(dist[static_cast<std::size_t>(v)]);
    return out;
}

/// rho(x, targets): length of the shortest directed path from x into the
/// target set; 0 when x is a member, infinite when unreachable.
inline Distance directed_distance(const Digraph& d, int source, const VertexSet& targets) {
    detail::require_same_universe(d, targets, "directed_distance");
    if (source < 0 || source >= d.vertex_count())
        throw argument_error("directed_distance: source vertex " + std::to_string(source) +
                             " out of range");
    if (targets.contains(source)) return Distance::finite(0);
    std::vector<char> seen(static_cast<std::size_t>(d.vertex_count()), 0);
    seen[static_cast<std::size_t>(source)] = 1;
    std::vector<int> frontier{source};
    int level = 0;
    while (!frontier.empty()) {
        ++level;
        std::vector<int> next;
        for (int v : frontier)
            for (int u : d.out_neighbors(v)) {
                if (targets.contains(u)) return Distance::finite(level);
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    next.push_back(u);
                }
            }
        frontier = std::move(next);
    }
    return Distance::infinite();
}

/// Largest rho(x, s) over all vertices; infinite as soon as one vertex
/// cannot reach s. A digraph with no vertices has gap 0.
inline Distance recurrence_gap(const Digraph& d, const VertexSet& s) {
    Distance gap = Distance::finite(0);
    for (Distance dist : distances_to(d, s)) {
        if (dist.is_infinite()) return Distance::infinite();
        gap = std::max(gap, dist);
    }
    return gap;
}

/// True when no two members are joined by an arc in either direction.
inline bool is_independent(const Digraph& d, const VertexSet& s) {
    detail::require_same_universe(d, s, "is_independent");
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (!s.contains(v)) continue;
        for (int u : d.out_neighbors(v))
            if (s.contains(u)) return false;
    }
    return true;
}

/// Vertices outside s with an arc into s: N^-(s) = {x : rho(x, s) = 1}.
inline VertexSet in_neighborhood(const Digraph& d, const VertexSet& s) {
    detail::require_same_universe(d, s, "in_neighborhood");
    VertexSet out(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) {
        if (!s.contains(v)) continue;
        for (int u : d.in_neighbors(v))
            if (!s.contains(u)) out.insert(u);
    }
    return out;
}

/// Subgraph induced by a vertex subset, with the mapping in both
/// directions. `original[i]` is ascending, so relabeling preserves order.
struct InducedSubgraph {
    Digraph graph;
    std::vector<int> original;  // new index -> original vertex
    std::vector<int> index_of;  // original vertex -> new index, -1 outside
};

inline InducedSubgraph induced_subgraph(const Digraph& d, const VertexSet& s) {
    detail::require_same_universe(d, s, "induced_subgraph");
    InducedSubgraph result;
    result.original = s.members();
    result.index_of.assign(static_cast<std::size_t>(d.vertex_count()), -1);
    for (std::size_t i = 0; i < result.original.size(); ++i)
        result.index_of[static_cast<std::size_t>(result.original[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> arcs;
    for (int x : result.original)
        for (int y : d.out_neighbors(x))
            if (s.contains(y))
                arcs.emplace_back(result.index_of[static_cast<std::size_t>(x)],
                                  result.index_of[static_cast<std::size_t>(y)]);
    result.graph = Digraph(static_cast<int>(result.original.size()), arcs);
    return result;
}

}  // namespace qklab
