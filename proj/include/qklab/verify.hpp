#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qklab/generators.hpp"
#include "qklab/io.hpp"
#include "qklab/kernels.hpp"
#include "qklab/oracles.hpp"

/// Seeded verification suites: each generates a deterministic corpus,
/// runs a construction, and certifies the result with the core predicates
/// and the oracle layer. The CLI `verify` command and the acceptance
/// binary both run these.

namespace qklab {

struct SuiteOptions {
    int count = 0;  // 0 picks the suite default
    std::uint64_t seed = 7;
    int max_n = 3;  // thm11 only
    int oracle_limit = default_oracle_limit;
};

struct SuiteItem {
    int index = 0;
    bool pass = true;
    std::string label;
    std::string detail;      // first failed check, empty when passing
    nlohmann::json replay;   // offending graph, failures only
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteItem> items;
    int passed = 0;
    int failed = 0;
    double seconds = 0.0;

    bool ok() const { return failed == 0; }
};

namespace detail {

/// Random digraph with 1..max_vertices vertices and per-vertex out-degree
/// drawn from 0..max_out, targets distinct and loop-free.
inline Digraph random_digraph(SplitMix64& rng, int max_vertices, int max_out) {
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_vertices)));
    std::vector<std::pair<int, int>> arcs;
    for (int x = 0; x < n; ++x) {
        const int cap = std::min(max_out, n - 1);
        const int degree = cap == 0 ? 0 : static_cast<int>(rng.below(static_cast<std::uint32_t>(cap + 1)));
        std::vector<char> taken(static_cast<std::size_t>(n), 0);
        int picked = 0;
        while (picked < degree) {
            const int y = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
            if (y == x || taken[static_cast<std::size_t>(y)]) continue;
            taken[static_cast<std::size_t>(y)] = 1;
            arcs.emplace_back(x, y);
            ++picked;
        }
    }
    return Digraph(n, arcs);
}

/// Tournament on m vertices; bit t of `code` orients the t-th pair (i, j)
/// in lexicographic order as i -> j when set, j -> i otherwise.
inline Digraph tournament_from_code(int m, std::uint64_t code) {
    std::vector<std::pair<int, int>> arcs;
    int bit = 0;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j, ++bit)
            arcs.emplace_back((code >> bit) & 1 ? std::pair{i, j} : std::pair{j, i});
    return Digraph(m, arcs);
}

inline Digraph random_functional(SplitMix64& rng, int max_vertices) {
    const int n = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_vertices)));
    std::vector<int> table(static_cast<std::size_t>(n));
    for (int& v : table) v = static_cast<int>(rng.below(static_cast<std::uint32_t>(n)));
    return from_functions({n, {table}});
}

/// Function on 2m points in which every image value has exactly two
/// preimages: a random pairing of the domain mapped to m distinct targets.
inline Digraph random_two_to_one(SplitMix64& rng, int max_half) {
    const int m = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_half)));
    const int n = 2 * m;
    std::vector<int> domain(static_cast<std::size_t>(n));
    std::vector<int> targets(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) domain[static_cast<std::size_t>(i)] = targets[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        std::swap(domain[static_cast<std::size_t>(i)],
                  domain[static_cast<std::size_t>(rng.below(static_cast<std::uint32_t>(i + 1)))]);
        std::swap(targets[static_cast<std::size_t>(i)],
                  targets[static_cast<std::size_t>(rng.below(static_cast<std::uint32_t>(i + 1)))]);
    }
    std::vector<int> table(static_cast<std::size_t>(n));
    for (int p = 0; p < m; ++p) {
        table[static_cast<std::size_t>(domain[static_cast<std::size_t>(2 * p)])] =
            targets[static_cast<std::size_t>(p)];
        table[static_cast<std::size_t>(domain[static_cast<std::size_t>(2 * p + 1)])] =
            targets[static_cast<std::size_t>(p)];
    }
    return from_functions({n, {table}});
}

/// Odd-dicycle-free digraph: strong components are even cycles plus
/// parity-respecting chords, stacked along a fixed component order so the
/// condensation is acyclic.
inline Digraph random_bipartite_scc_dag(SplitMix64& rng, int max_vertices) {
    static const int sizes[] = {1, 2, 4, 6};
    std::vector<int> component_size;
    int total = 0;
    const int want = 1 + static_cast<int>(rng.below(4));
    while (static_cast<int>(component_size.size()) < want) {
        const int s = sizes[rng.below(4)];
        if (total + s > max_vertices) break;
        component_size.push_back(s);
        total += s;
    }
    if (component_size.empty()) component_size.push_back(1), total = 1;

    std::vector<int> offset;
    int at = 0;
    for (int s : component_size) {
        offset.push_back(at);
        at += s;
    }

    std::vector<std::pair<int, int>> arcs;
    for (std::size_t c = 0; c < component_size.size(); ++c) {
        const int s = component_size[c], o = offset[c];
        if (s >= 2)
            for (int p = 0; p < s; ++p) arcs.emplace_back(o + p, o + (p + 1) % s);
        // chords across the parity classes keep every dicycle even
        for (int p = 0; p < s; ++p)
            for (int q = 0; q < s; ++q)
                if ((p + q) % 2 == 1 && rng.below(4) == 0) arcs.emplace_back(o + p, o + q);
    }
    for (std::size_t a = 0; a < component_size.size(); ++a)
        for (std::size_t b = a + 1; b < component_size.size(); ++b) {
            const int links = static_cast<int>(rng.below(3));
            for (int t = 0; t < links; ++t)
                arcs.emplace_back(
                    offset[a] + static_cast<int>(rng.below(static_cast<std::uint32_t>(component_size[a]))),
                    offset[b] + static_cast<int>(rng.below(static_cast<std::uint32_t>(component_size[b]))));
        }
    return Digraph(total, arcs);
}

/// Rotational tournament on Z_5 with connection set {1, 2}: out-degree 2,
/// underlying graph K_5, so chromatic number 5 and no kernel.
inline Digraph circulant_tournament_5() {
    std::vector<std::pair<int, int>> arcs;
    for (int x = 0; x < 5; ++x) {
        arcs.emplace_back(x, (x + 1) % 5);
        arcs.emplace_back(x, (x + 2) % 5);
    }
    return Digraph(5, arcs);
}

inline void fail(SuiteItem& item, const Digraph& g, const std::string& why) {
    if (item.pass) {
        item.pass = false;
        item.detail = why;
        item.replay = digraph_to_json(g);
    }
}

inline void check(SuiteItem& item, const Digraph& g, bool condition, const std::string& why) {
    if (!condition) fail(item, g, why);
}

template <typename Body>
SuiteReport run_items(const std::string& name, int count, const Body& body) {
    SuiteReport report;
    report.suite = name;
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < count; ++i) {
        SuiteItem item;
        item.index = i;
        body(i, item);
        (item.pass ? report.passed : report.failed)++;
        report.items.push_back(std::move(item));
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace detail

/// Quasi-kernels from greedy colorings certify on random digraphs
/// (<= 40 vertices, out-degree <= 4).
inline SuiteReport run_thm12(const SuiteOptions& opt = {}) {
    const int count = opt.count > 0 ? opt.count : 1000;
    SplitMix64 rng(opt.seed);
    return detail::run_items("thm12", count, [&](int, SuiteItem& item) {
        const Digraph g = detail::random_digraph(rng, 40, 4);
        item.label = "n=" + std::to_string(g.vertex_count());
        const VertexSet m = quasi_kernel_from_coloring(g, greedy_underlying_coloring(g));
        detail::check(item, g, is_independent(g, m), "quasi-kernel not independent");
        detail::check(item, g, recurrence_gap(g, m).at_most(2), "recurrence gap exceeds 2");
    });
}

/// dominate() certifies on random digraphs (<= 20 vertices, out-degree
/// <= 3), with the induced chromatic number confirmed by the oracle.
inline SuiteReport run_thm41(const SuiteOptions& opt = {}) {
    const int count = opt.count > 0 ? opt.count : 500;
    SplitMix64 rng(opt.seed);
    return detail::run_items("thm41", count, [&](int, SuiteItem& item) {
        const Digraph g = detail::random_digraph(rng, 20, 3);
        const int n = max_out_degree(g);
        item.label = "n=" + std::to_string(g.vertex_count()) + " d=" + std::to_string(n);
        const Domination dom = dominate(g);
        detail::check(item, g, recurrence_gap(g, dom.set).at_most(1), "domination gap exceeds 1");
        const auto sub = induced_subgraph(g, dom.set);
        detail::check(item, g, is_proper(sub.graph, dom.coloring), "coloring of D[M] not proper");
        detail::check(item, g, dom.coloring.color_count() <= n + 1,
                      "D[M] coloring uses more than n+1 colors");
        detail::check(item, g, exact_chromatic(sub.graph, opt.oracle_limit) <= n + 1,
                      "oracle chromatic number of D[M] exceeds n+1");
    });
}

/// color_bounded_out_degree stays proper and within (n+1)(n+2)/2 colors
/// for out-degree bounds 1..max_n; the directed 3-cycle needs exactly 3.
inline SuiteReport run_thm11(const SuiteOptions& opt = {}) {
    const int per_degree = opt.count > 0 ? opt.count : 100;
    SplitMix64 rng(opt.seed);
    const int total = per_degree * opt.max_n + 1;
    return detail::run_items("thm11", total, [&](int i, SuiteItem& item) {
        if (i == total - 1) {
            const Digraph g(3, {{0, 1}, {1, 2}, {2, 0}});
            item.label = "3-cycle attains bound 3";
            const Coloring c = color_bounded_out_degree(g);
            detail::check(item, g, is_proper(g, c), "coloring not proper");
            detail::check(item, g, c.color_count() == 3, "3-cycle should need exactly 3 colors");
            return;
        }
        const int degree_cap = 1 + i / per_degree;
        Digraph g = (i % 2 == 0)
                        ? detail::random_digraph(rng, 16, degree_cap)
                        : random_out_degree(degree_cap + 1 + static_cast<int>(rng.below(15)),
                                            degree_cap, rng.next());
        const int n = max_out_degree(g);
        item.label = "cap=" + std::to_string(degree_cap) + " n=" + std::to_string(g.vertex_count());
        const Coloring c = color_bounded_out_degree(g);
        detail::check(item, g, is_proper(g, c), "coloring not proper");
        detail::check(item, g, c.color_count() <= (n + 1) * (n + 2) / 2,
                      "color count exceeds (n+1)(n+2)/2");
    });
}

/// Chvatal-Lovasz quasi-kernels certify on every tournament with at most
/// 6 vertices and on random digraphs.
inline SuiteReport run_cl(const SuiteOptions& opt = {}) {
    const int random_count = opt.count > 0 ? opt.count : 2000;
    SplitMix64 rng(opt.seed);
    return detail::run_items("cl", 6 + random_count, [&](int i, SuiteItem& item) {
        if (i < 6) {
            const int m = i + 1;
            const std::uint64_t codes = std::uint64_t{1} << (m * (m - 1) / 2);
            item.label = "all " + std::to_string(codes) + " tournaments on " + std::to_string(m);
            for (std::uint64_t code = 0; code < codes; ++code) {
                const Digraph g = detail::tournament_from_code(m, code);
                const VertexSet q = quasi_kernel_cl(g);
                detail::check(item, g, is_independent(g, q),
                              "tournament code " + std::to_string(code) + ": not independent");
                detail::check(item, g, recurrence_gap(g, q).at_most(2),
                              "tournament code " + std::to_string(code) + ": gap exceeds 2");
                if (!item.pass) break;
            }
            return;
        }
        const Digraph g = detail::random_digraph(rng, 30, 5);
        item.label = "n=" + std::to_string(g.vertex_count());
        const VertexSet q = quasi_kernel_cl(g);
        detail::check(item, g, is_independent(g, q), "quasi-kernel not independent");
        detail::check(item, g, recurrence_gap(g, q).at_most(2), "recurrence gap exceeds 2");
    });
}

/// Richardson kernels certify on generated odd-dicycle-free digraphs and
/// the kernel oracle agrees a kernel exists.
inline SuiteReport run_richardson(const SuiteOptions& opt = {}) {
    const int count = opt.count > 0 ? opt.count : 500;
    SplitMix64 rng(opt.seed);
    return detail::run_items("richardson", count, [&](int, SuiteItem& item) {
        const Digraph g = detail::random_bipartite_scc_dag(rng, 16);
        item.label = "n=" + std::to_string(g.vertex_count());
        detail::check(item, g, !has_odd_dicycle(g), "corpus graph has an odd dicycle");
        if (!item.pass) return;
        const VertexSet k = richardson_kernel(g);
        detail::check(item, g, is_independent(g, k), "kernel not independent");
        detail::check(item, g, recurrence_gap(g, k).at_most(1), "kernel gap exceeds 1");
        detail::check(item, g, kernel_search(g, opt.oracle_limit).has_value(),
                      "oracle found no kernel");
    });
}

/// Minimum out-domination of the 7-vertex Paley tournament is exactly 3.
inline SuiteReport run_paley(const SuiteOptions& opt = {}) {
    return detail::run_items("paley", 1, [&](int, SuiteItem& item) {
        const Digraph g = paley_tournament(7);
        item.label = "PTr(7) minimum out-domination";
        const OracleResult r = min_out_domination(g, opt.oracle_limit);
        detail::check(item, g, r.value == 3,
                      "minimum is " + std::to_string(r.value) + ", expected 3");
        detail::check(item, g, recurrence_gap(g, r.witness).at_most(1), "witness does not dominate");
        detail::check(item, g, recurrence_gap(g, VertexSet(7, {0, 1, 3})).at_most(1),
                      "{0,1,3} should dominate");
    });
}

/// Out-degree <= 2 corpus: graphs with a kernel get a proper <= 4 coloring
/// through it, and graphs of chromatic number 5 have no kernel.
inline SuiteReport run_kernel4(const SuiteOptions& opt = {}) {
    const int count = opt.count > 0 ? opt.count : 300;
    SplitMix64 rng(opt.seed);
    return detail::run_items("kernel4", count, [&](int i, SuiteItem& item) {
        const Digraph g = i == 0 ? detail::circulant_tournament_5() : detail::random_digraph(rng, 16, 2);
        item.label = (i == 0 ? std::string("Z5 circulant ") : std::string()) +
                     "n=" + std::to_string(g.vertex_count());
        const auto kernel = kernel_search(g, opt.oracle_limit);
        if (kernel) {
            const Coloring c = four_coloring_from_kernel(g, *kernel);
            detail::check(item, g, is_proper(g, c), "kernel coloring not proper");
            detail::check(item, g, c.color_count() <= 4, "kernel coloring uses more than 4 colors");
        }
        if (exact_chromatic(g, opt.oracle_limit) == 5)
            detail::check(item, g, !kernel.has_value(),
                          "chromatic number 5 with out-degree 2 must exclude a kernel");
    });
}

/// Single-function digraphs 3-color from a Chvatal-Lovasz quasi-kernel.
inline SuiteReport run_prop33(const SuiteOptions& opt = {}) {
    const int count = opt.count > 0 ? opt.count : 300;
    SplitMix64 rng(opt.seed);
    return detail::run_items("prop33", count, [&](int, SuiteItem& item) {
        const Digraph g = detail::random_functional(rng, 20);
        item.label = "n=" + std::to_string(g.vertex_count());
        const VertexSet a = quasi_kernel_cl(g);
        const Coloring c = three_color_single_function(g, a);
        detail::check(item, g, is_proper(g, c), "layer coloring not proper");
        detail::check(item, g, c.color_count() <= 3, "layer coloring uses more than 3 colors");
        if (g.vertex_count() <= opt.oracle_limit)
            detail::check(item, g, exact_chromatic(g, opt.oracle_limit) <= 3,
                          "oracle chromatic number exceeds 3");
    });
}

/// 2-to-1 function digraphs have chromatic index at most 4.
inline SuiteReport run_edge4(const SuiteOptions& opt = {}) {
    const int count = opt.count > 0 ? opt.count : 200;
    SplitMix64 rng(opt.seed);
    return detail::run_items("edge4", count, [&](int, SuiteItem& item) {
        const Digraph g = detail::random_two_to_one(rng, 6);
        item.label = "n=" + std::to_string(g.vertex_count());
        detail::check(item, g, edge_chromatic(g, opt.oracle_limit) <= 4,
                      "chromatic index exceeds 4");
    });
}

/// Bernoulli shift of Z_3 on {0,1}^Z_3: 8 points, free part of 6 points
/// splitting into two directed 3-cycles, invariance and action axioms.
inline SuiteReport run_bernoulli(const SuiteOptions& = {}) {
    return detail::run_items("bernoulli", 5, [&](int i, SuiteItem& item) {
        const Group z3 = cyclic_group(3);
        const BernoulliSchreier bs = bernoulli_schreier(z3, {1}, 2);
        const Digraph& g = bs.graph;
        switch (i) {
            case 0:
                item.label = "point count 8";
                detail::check(item, g, g.vertex_count() == 8, "expected 2^3 = 8 points");
                break;
            case 1:
                item.label = "free part size 6";
                detail::check(item, g, bs.free_part.count() == 6,
                              "free part has " + std::to_string(bs.free_part.count()) + " points");
                break;
            case 2: {
                item.label = "free part = two directed 3-cycles";
                const auto sub = induced_subgraph(g, bs.free_part);
                detail::check(item, g, sub.graph.vertex_count() == 6 && sub.graph.arc_count() == 6,
                              "free-part subgraph is not 6 vertices / 6 arcs");
                bool degrees = true;
                for (int v = 0; v < sub.graph.vertex_count(); ++v)
                    degrees = degrees && sub.graph.out_degree(v) == 1 && sub.graph.in_degree(v) == 1;
                detail::check(item, g, degrees, "free-part subgraph is not a union of dicycles");
                const auto scc = strongly_connected_components(sub.graph);
                detail::check(item, g, scc.count == 2, "free-part subgraph is not two components");
                for (const auto& members : scc.members)
                    detail::check(item, g, members.size() == 3, "component is not a 3-cycle");
                break;
            }
            case 3: {
                item.label = "free part invariant";
                bool invariant = true;
                for (int g_el = 0; g_el < bs.action.group().order; ++g_el)
                    for (int x = 0; x < bs.action.point_count(); ++x)
                        if (bs.free_part.contains(x) != bs.free_part.contains(bs.action.apply(g_el, x)))
                            invariant = false;
                detail::check(item, g, invariant, "free part moved by the action");
                break;
            }
            case 4: {
                item.label = "action axioms over the full cube";
                bool axioms = true;
                const Group& grp = bs.action.group();
                for (int a = 0; a < grp.order; ++a)
                    for (int b = 0; b < grp.order; ++b)
                        for (int x = 0; x < bs.action.point_count(); ++x) {
                            const int ab = grp.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                            if (bs.action.apply(a, bs.action.apply(b, x)) != bs.action.apply(ab, x))
                                axioms = false;
                        }
                for (int x = 0; x < bs.action.point_count(); ++x)
                    if (bs.action.apply(grp.identity, x) != x) axioms = false;
                detail::check(item, g, axioms, "action axioms violated");
                break;
            }
        }
    });
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"thm12",      "thm41",  "thm11",
                                                "cl",         "richardson", "paley",
                                                "kernel4",    "prop33", "edge4"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {}) {
    if (name == "thm12") return run_thm12(opt);
    if (name == "thm41") return run_thm41(opt);
    if (name == "thm11") return run_thm11(opt);
    if (name == "cl") return run_cl(opt);
    if (name == "richardson") return run_richardson(opt);
    if (name == "paley") return run_paley(opt);
    if (name == "kernel4") return run_kernel4(opt);
    if (name == "prop33") return run_prop33(opt);
    if (name == "edge4") return run_edge4(opt);
    if (name == "bernoulli") return run_bernoulli(opt);
    throw argument_error("unknown suite: " + name);
}

}  // namespace qklab
