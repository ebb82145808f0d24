#pragma once

#include <optional>
#include <vector>

#include "qklab/coloring.hpp"
#include "qklab/digraph.hpp"
#include "qklab/scc.hpp"

/// Constructive kernel theory on finite digraphs: quasi-kernels extracted
/// from proper colorings, the Chvatal-Lovasz recursion, Richardson kernels
/// for odd-dicycle-free digraphs, dominating sets with small induced
/// chromatic number, and the colorings they yield for bounded out-degree.

namespace qklab {

namespace detail {

// Breadth-first search restricted to one strong component. For forward
// searches `link[x]` is the BFS-tree predecessor of x; for reverse searches
// it is the next hop from x toward the root.
struct ComponentBfs {
    std::vector<int> dist;
    std::vector<int> link;
};

inline ComponentBfs component_bfs(const Digraph& d, const std::vector<int>& component, int root,
                                  bool forward) {
    const int n = d.vertex_count();
    ComponentBfs r;
    r.dist.assign(static_cast<std::size_t>(n), -1);
    r.link.assign(static_cast<std::size_t>(n), -1);
    r.dist[static_cast<std::size_t>(root)] = 0;
    std::vector<int> frontier{root};
    const int home = component[static_cast<std::size_t>(root)];
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier) {
            const auto& nbrs = forward ? d.out_neighbors(v) : d.in_neighbors(v);
            for (int u : nbrs) {
                if (component[static_cast<std::size_t>(u)] != home) continue;
                if (r.dist[static_cast<std::size_t>(u)] >= 0) continue;
                r.dist[static_cast<std::size_t>(u)] = r.dist[static_cast<std::size_t>(v)] + 1;
                r.link[static_cast<std::size_t>(u)] = v;
                next.push_back(u);
            }
        }
        frontier = std::move(next);
    }
    return r;
}

inline std::vector<int> forward_path(const ComponentBfs& bfs, int root, int target) {
    std::vector<int> path;
    for (int v = target; v != root; v = bfs.link[static_cast<std::size_t>(v)]) path.push_back(v);
    path.push_back(root);
    std::reverse(path.begin(), path.end());
    return path;
}

inline std::vector<int> backward_path(const ComponentBfs& bfs, int root, int source) {
    std::vector<int> path;
    for (int v = source; v != root; v = bfs.link[static_cast<std::size_t>(v)]) path.push_back(v);
    path.push_back(root);
    return path;
}

// Splices an odd closed directed walk down to an odd simple directed cycle:
// every repeated vertex closes a sub-cycle; even ones are cut out, the
// first odd one is returned. Total walk parity guarantees one exists.
inline std::vector<int> extract_odd_cycle(const std::vector<int>& walk, int n) {
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    stack.push_back(walk.front());
    position[static_cast<std::size_t>(walk.front())] = 0;
    for (std::size_t i = 1; i < walk.size(); ++i) {
        const int x = walk[i];
        const int p = position[static_cast<std::size_t>(x)];
        if (p < 0) {
            position[static_cast<std::size_t>(x)] = static_cast<int>(stack.size());
            stack.push_back(x);
            continue;
        }
        const int cycle_length = static_cast<int>(stack.size()) - p;
        if (cycle_length % 2 == 1)
            return std::vector<int>(stack.begin() + p, stack.end());
        while (static_cast<int>(stack.size()) > p + 1) {
            position[static_cast<std::size_t>(stack.back())] = -1;
            stack.pop_back();
        }
    }
    throw error("internal: odd closed walk contained no odd cycle");
}

}  // namespace detail

/// Searches for a directed cycle of odd length and returns its vertices in
/// cycle order. Per strong component, parity of the breadth-first distance
/// from a root is a consistent 2-labeling exactly when every closed walk is
/// even; a root-to-root walk of odd length witnesses the violation and is
/// spliced down to a simple odd cycle.
inline std::optional<std::vector<int>> find_odd_dicycle(const Digraph& d) {
    const auto scc = strongly_connected_components(d);
    for (int c = 0; c < scc.count; ++c) {
        const auto& members = scc.members[static_cast<std::size_t>(c)];
        if (members.size() < 2) continue;  // loop-free, so singletons carry no cycle
        const int root = members.front();
        const auto fwd = detail::component_bfs(d, scc.component, root, true);
        const auto bwd = detail::component_bfs(d, scc.component, root, false);
        for (int x : members) {
            if (x == root) continue;
            const int length = fwd.dist[static_cast<std::size_t>(x)] + bwd.dist[static_cast<std::size_t>(x)];
            if (length % 2 == 0) continue;
            std::vector<int> walk = detail::forward_path(fwd, root, x);
            const auto back = detail::backward_path(bwd, root, x);
            walk.insert(walk.end(), back.begin() + 1, back.end());
            return detail::extract_odd_cycle(walk, d.vertex_count());
        }
        for (int u : members) {
            for (int v : d.out_neighbors(u)) {
                if (scc.component[static_cast<std::size_t>(v)] != c) continue;
                const int length =
                    fwd.dist[static_cast<std::size_t>(u)] + 1 + bwd.dist[static_cast<std::size_t>(v)];
                if (length % 2 == 0) continue;
                std::vector<int> walk = detail::forward_path(fwd, root, u);
                const auto back = detail::backward_path(bwd, root, v);
                walk.insert(walk.end(), back.begin(), back.end());
                return detail::extract_odd_cycle(walk, d.vertex_count());
            }
        }
    }
    return std::nullopt;
}

inline bool has_odd_dicycle(const Digraph& d) { return find_odd_dicycle(d).has_value(); }

namespace detail {

// Induction on the number of colors. `colors` is proper on d but need not
// use a contiguous range here: recursion drops color 0 and shifts the rest
// down, and classes that vanish inside T just leave a vacuous level.
inline VertexSet quasi_kernel_step(const Digraph& d, const std::vector<int>& colors,
                                   int color_count) {
    const int n = d.vertex_count();
    if (color_count <= 1) return VertexSet::all(n);

    VertexSet color_zero(n);
    for (int v = 0; v < n; ++v)
        if (colors[static_cast<std::size_t>(v)] == 0) color_zero.insert(v);

    // T: vertices outside A with no arc into A.
    VertexSet t(n);
    for (int v = 0; v < n; ++v) {
        if (color_zero.contains(v)) continue;
        bool into_a = false;
        for (int u : d.out_neighbors(v))
            if (color_zero.contains(u)) {
                into_a = true;
                break;
            }
        if (!into_a) t.insert(v);
    }
    if (t.empty()) return color_zero;

    const auto sub = induced_subgraph(d, t);
    std::vector<int> sub_colors(sub.original.size());
    for (std::size_t i = 0; i < sub.original.size(); ++i)
        sub_colors[i] = colors[static_cast<std::size_t>(sub.original[i])] - 1;
    const VertexSet t_prime_sub = quasi_kernel_step(sub.graph, sub_colors, color_count - 1);

    VertexSet t_prime(n);
    for (int i : t_prime_sub.members()) t_prime.insert(sub.original[static_cast<std::size_t>(i)]);

    // A': members of A with an arc into T'.
    VertexSet a_prime(n);
    for (int v : color_zero.members())
        for (int u : d.out_neighbors(v))
            if (t_prime.contains(u)) {
                a_prime.insert(v);
                break;
            }

    return (color_zero - a_prime) | t_prime;
}

}  // namespace detail

/// Quasi-kernel (independent, recurrence gap <= 2) extracted from a proper
/// coloring by induction on the number of colors: peel the color-0 class A,
/// recurse on T = {x outside A with no arc into A}, and return
/// (A minus A') united with T'.
inline VertexSet quasi_kernel_from_coloring(const Digraph& d, const Coloring& c) {
    if (!is_proper(d, c))
        throw precondition_error("quasi_kernel_from_coloring: coloring is not proper");
    return detail::quasi_kernel_step(d, c.colors(), c.color_count());
}

/// Chvatal-Lovasz quasi-kernel. Pivots are taken in ascending index order;
/// each pivot deletes itself and its in-neighbors, and the unwind keeps a
/// pivot exactly when it has no arc into the deeper solution.
inline VertexSet quasi_kernel_cl(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    std::vector<int> pivots;
    for (int v = 0; v < n; ++v) {
        if (!alive[static_cast<std::size_t>(v)]) continue;
        pivots.push_back(v);
        alive[static_cast<std::size_t>(v)] = 0;
        for (int u : d.in_neighbors(v)) alive[static_cast<std::size_t>(u)] = 0;
    }
    VertexSet q(n);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        bool covered = false;
        for (int u : d.out_neighbors(*it))
            if (q.contains(u)) {
                covered = true;
                break;
            }
        if (!covered) q.insert(*it);
    }
    return q;
}

enum class QuasiKernelStrategy {
    from_coloring,    // greedy coloring + quasi_kernel_from_coloring
    chvatal_lovasz,
};

inline VertexSet quasi_kernel(const Digraph& d,
                              QuasiKernelStrategy strategy = QuasiKernelStrategy::from_coloring) {
    if (strategy == QuasiKernelStrategy::chvatal_lovasz) return quasi_kernel_cl(d);
    return quasi_kernel_from_coloring(d, greedy_underlying_coloring(d));
}

/// Dominating set M (gap <= 1) together with a proper coloring of D[M]
/// using at most max_out_degree + 1 colors. The coloring is indexed by the
/// ascending members of M, matching induced_subgraph(d, M).
struct Domination {
    VertexSet set;
    Coloring coloring;
};

/// Induction on the out-degree bound n: a quasi-kernel M' absorbs all
/// vertices at distance <= 1, the distance-2 set A induces a subgraph of
/// out-degree <= n-1 (each of its vertices spends an arc on reaching M'),
/// and M' takes one fresh color above the recursive palette.
inline Domination dominate(const Digraph& d,
                           QuasiKernelStrategy strategy = QuasiKernelStrategy::from_coloring) {
    const int n = d.vertex_count();
    const int degree_bound = max_out_degree(d);
    if (degree_bound == 0)
        return {VertexSet::all(n),
                n == 0 ? Coloring() : Coloring(std::vector<int>(static_cast<std::size_t>(n), 0))};

    const VertexSet m_prime = quasi_kernel(d, strategy);
    const auto dist = distances_to(d, m_prime);
    VertexSet distance_two(n);
    for (int v = 0; v < n; ++v) {
        if (!dist[static_cast<std::size_t>(v)].at_most(2))
            throw error("internal: quasi-kernel recurrence gap exceeds 2");
        if (dist[static_cast<std::size_t>(v)] == Distance::finite(2)) distance_two.insert(v);
    }

    const auto sub = induced_subgraph(d, distance_two);
    if (max_out_degree(sub.graph) > degree_bound - 1)
        throw error("internal: distance-2 subgraph did not lose out-degree");
    const Domination inner = dominate(sub.graph, strategy);

    VertexSet m = m_prime;
    std::vector<int> color_of(static_cast<std::size_t>(n), -1);
    {
        const auto inner_members = inner.set.members();
        for (std::size_t j = 0; j < inner_members.size(); ++j) {
            const int original = sub.original[static_cast<std::size_t>(inner_members[j])];
            m.insert(original);
            color_of[static_cast<std::size_t>(original)] = inner.coloring.color(static_cast<int>(j));
        }
    }
    const int fresh = inner.coloring.color_count();
    for (int v : m_prime.members()) color_of[static_cast<std::size_t>(v)] = fresh;

    std::vector<int> colors;
    for (int v : m.members()) colors.push_back(color_of[static_cast<std::size_t>(v)]);
    return {m, Coloring(colors)};
}

/// Proper coloring with at most (n+1)(n+2)/2 colors, n = max_out_degree:
/// dominate, recurse on the complement (out-degree drops there, every
/// vertex having spent an arc on M), then lift M's <= n+1 colors above the
/// recursive palette.
inline Coloring color_bounded_out_degree(const Digraph& d) {
    const int n = d.vertex_count();
    const int degree_bound = max_out_degree(d);
    if (degree_bound == 0)
        return n == 0 ? Coloring() : Coloring(std::vector<int>(static_cast<std::size_t>(n), 0));

    const Domination dom = dominate(d);
    const VertexSet rest = dom.set.complement();
    const auto sub = induced_subgraph(d, rest);
    if (max_out_degree(sub.graph) > degree_bound - 1)
        throw error("internal: complement of dominating set did not lose out-degree");
    const Coloring inner = color_bounded_out_degree(sub.graph);
    const int shift = inner.color_count();

    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    {
        const auto rest_members = rest.members();
        for (std::size_t j = 0; j < rest_members.size(); ++j)
            colors[static_cast<std::size_t>(rest_members[j])] = inner.color(static_cast<int>(j));
        const auto dom_members = dom.set.members();
        for (std::size_t j = 0; j < dom_members.size(); ++j)
            colors[static_cast<std::size_t>(dom_members[j])] =
                shift + dom.coloring.color(static_cast<int>(j));
    }
    return Coloring(colors);
}

/// Richardson's construction for odd-dicycle-free digraphs: repeatedly take
/// a sink strong component of the remainder, keep its even-parity class
/// (parity from the least vertex is consistent since all closed walks are
/// even), and delete the component plus everything with an arc into the
/// kept class.
inline VertexSet richardson_kernel(const Digraph& d) {
    if (auto cycle = find_odd_dicycle(d))
        throw precondition_error("richardson_kernel: digraph has an odd directed cycle", *cycle);
    const int n = d.vertex_count();
    VertexSet kernel(n);
    VertexSet alive = VertexSet::all(n);
    while (!alive.empty()) {
        const auto sub = induced_subgraph(d, alive);
        const auto scc = strongly_connected_components(sub.graph);
        const auto& members = scc.members.front();  // component 0 is a sink
        const auto fwd = detail::component_bfs(sub.graph, scc.component, members.front(), true);
        VertexSet chosen(n);
        for (int x : members)
            if (fwd.dist[static_cast<std::size_t>(x)] % 2 == 0)
                chosen.insert(sub.original[static_cast<std::size_t>(x)]);
        kernel |= chosen;
        alive -= in_neighborhood(d, chosen);
        for (int x : members) alive.erase(sub.original[static_cast<std::size_t>(x)]);
    }
    return kernel;
}

/// For out-degree <= 2 digraphs with a kernel K: the complement loses an
/// arc per vertex (the one into K), so it colors with <= 3 colors, and K
/// takes a fresh fourth. The kernel certificate is checked, not trusted.
inline Coloring four_coloring_from_kernel(const Digraph& d, const VertexSet& kernel) {
    detail::require_same_universe(d, kernel, "four_coloring_from_kernel");
    if (max_out_degree(d) > 2)
        throw precondition_error("four_coloring_from_kernel: out-degree exceeds 2");
    if (!is_independent(d, kernel))
        throw precondition_error("four_coloring_from_kernel: set is not independent");
    if (d.vertex_count() > 0 && !recurrence_gap(d, kernel).at_most(1))
        throw precondition_error("four_coloring_from_kernel: set is not a kernel (gap exceeds 1)");

    const int n = d.vertex_count();
    if (n == 0) return Coloring();
    const VertexSet rest = kernel.complement();
    const auto sub = induced_subgraph(d, rest);
    if (max_out_degree(sub.graph) > 1)
        throw error("internal: complement of a kernel kept out-degree above 1");
    const Coloring inner = color_bounded_out_degree(sub.graph);

    std::vector<int> colors(static_cast<std::size_t>(n), -1);
    const auto rest_members = rest.members();
    for (std::size_t j = 0; j < rest_members.size(); ++j)
        colors[static_cast<std::size_t>(rest_members[j])] = inner.color(static_cast<int>(j));
    for (int v : kernel.members()) colors[static_cast<std::size_t>(v)] = inner.color_count();
    return Coloring(colors);
}

}  // namespace qklab
