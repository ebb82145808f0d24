#include <catch2/catch.hpp>

#include "qklab/digraph.hpp"
#include "qklab/generators.hpp"
#include "test_support.hpp"

using namespace qklab;

namespace {

const Digraph cycle3(3, {{0, 1}, {1, 2}, {2, 0}});
const Digraph path3(3, {{0, 1}, {1, 2}});

}  // namespace

TEST_CASE("construction normalizes and validates") {
    REQUIRE(cycle3.vertex_count() == 3);
    for (int v = 0; v < 3; ++v) REQUIRE(cycle3.out_degree(v) == 1);

    const Digraph dedup(2, {{0, 1}, {0, 1}});
    REQUIRE(dedup.arc_count() == 1);
    REQUIRE(dedup.has_arc(0, 1));

    REQUIRE_THROWS_AS(Digraph(1, {{0, 0}}), argument_error);
    REQUIRE_THROWS_AS(Digraph(2, {{0, 3}}), argument_error);
    REQUIRE_THROWS_AS(Digraph(2, {{-1, 0}}), argument_error);
    REQUIRE_THROWS_AS(Digraph(-2, {}), argument_error);
}

TEST_CASE("adjacency lists are sorted duplicate-free transposes") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const Digraph d = qktest::random_digraph(rng, 20, 4);
        const int n = d.vertex_count();
        for (int v = 0; v < n; ++v) {
            const auto& out = d.out_neighbors(v);
            REQUIRE(std::is_sorted(out.begin(), out.end()));
            REQUIRE(std::adjacent_find(out.begin(), out.end()) == out.end());
            const auto& in = d.in_neighbors(v);
            REQUIRE(std::is_sorted(in.begin(), in.end()));
            REQUIRE(std::adjacent_find(in.begin(), in.end()) == in.end());
        }
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (x == y) continue;
                const auto& out = d.out_neighbors(x);
                const auto& in = d.in_neighbors(y);
                const bool in_out = std::binary_search(out.begin(), out.end(), y);
                const bool in_in = std::binary_search(in.begin(), in.end(), x);
                REQUIRE(in_out == in_in);
                REQUIRE(in_out == d.has_arc(x, y));
            }
    }
}

TEST_CASE("directed_distance on the named examples") {
    REQUIRE(directed_distance(cycle3, 1, VertexSet(3, {0})) == Distance::finite(2));
    REQUIRE(directed_distance(cycle3, 2, VertexSet(3, {0, 2})) == Distance::finite(0));
    REQUIRE(directed_distance(path3, 2, VertexSet(3, {0})).is_infinite());
    REQUIRE(directed_distance(cycle3, 0, VertexSet(3)).is_infinite());
    REQUIRE_THROWS_AS(directed_distance(cycle3, 5, VertexSet(3, {0})), argument_error);
    REQUIRE_THROWS_AS(directed_distance(cycle3, 0, VertexSet(2, {0})), argument_error);
}

TEST_CASE("distances agree with the Floyd-Warshall route") {
    SplitMix64 rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const Digraph d = qktest::random_digraph(rng, 12, 3);
        const int n = d.vertex_count();
        const auto table = qktest::all_pairs_distances(d);
        const std::uint32_t target_mask = static_cast<std::uint32_t>(rng.next()) & ((1u << n) - 1);
        const auto members = qktest::mask_members(n, target_mask);
        const VertexSet targets(n, members);
        const auto fast = distances_to(d, targets);
        for (int x = 0; x < n; ++x) {
            const int brute = qktest::set_distance(table, x, members);
            if (brute >= qktest::kUnreachable) {
                REQUIRE(fast[x].is_infinite());
                REQUIRE(directed_distance(d, x, targets).is_infinite());
            } else {
                REQUIRE(fast[x] == Distance::finite(brute));
                REQUIRE(directed_distance(d, x, targets) == Distance::finite(brute));
            }
        }
    }
}

TEST_CASE("every arc is a distance-1 path") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const Digraph d = qktest::random_digraph(rng, 15, 3);
        for (const auto& [x, y] : d.arcs())
            REQUIRE(directed_distance(d, x, VertexSet(d.vertex_count(), {y})) == Distance::finite(1));
    }
}

TEST_CASE("recurrence_gap on the named examples") {
    REQUIRE(recurrence_gap(cycle3, VertexSet(3, {0})) == Distance::finite(2));
    REQUIRE(recurrence_gap(cycle3, VertexSet::all(3)) == Distance::finite(0));
    REQUIRE(recurrence_gap(path3, VertexSet(3, {0})).is_infinite());
    REQUIRE(recurrence_gap(Digraph(), VertexSet(0)) == Distance::finite(0));
}

TEST_CASE("recurrence_gap is the pointwise maximum") {
    SplitMix64 rng(14);
    for (int trial = 0; trial < 60; ++trial) {
        const Digraph d = qktest::random_digraph(rng, 12, 3);
        const int n = d.vertex_count();
        const auto members =
            qktest::mask_members(n, static_cast<std::uint32_t>(rng.next()) & ((1u << n) - 1));
        const VertexSet s(n, members);
        const Distance gap = recurrence_gap(d, s);
        for (int bound = 0; bound <= n; ++bound) {
            bool all_within = true;
            for (int x = 0; x < n; ++x)
                all_within = all_within && directed_distance(d, x, s).at_most(bound);
            REQUIRE(all_within == gap.at_most(bound));
        }
    }
}

TEST_CASE("is_independent on the named examples") {
    REQUIRE_FALSE(is_independent(cycle3, VertexSet(3, {0, 1})));
    REQUIRE(is_independent(cycle3, VertexSet(3, {0})));
    REQUIRE(is_independent(cycle3, VertexSet(3)));
}

TEST_CASE("in_neighborhood on the named examples") {
    REQUIRE(in_neighborhood(cycle3, VertexSet(3, {0})) == VertexSet(3, {2}));
    REQUIRE(in_neighborhood(cycle3, VertexSet::all(3)) == VertexSet(3));
    const Digraph arcless(4, {});
    REQUIRE(in_neighborhood(arcless, VertexSet(4, {1, 2})) == VertexSet(4));
}

TEST_CASE("in_neighborhood members sit at distance exactly 1") {
    SplitMix64 rng(15);
    for (int trial = 0; trial < 60; ++trial) {
        const Digraph d = qktest::random_digraph(rng, 14, 3);
        const int n = d.vertex_count();
        const auto members =
            qktest::mask_members(n, static_cast<std::uint32_t>(rng.next()) & ((1u << n) - 1));
        const VertexSet s(n, members);
        const VertexSet hood = in_neighborhood(d, s);
        REQUIRE((hood & s) == VertexSet(n));
        for (int x = 0; x < n; ++x) {
            const bool at_one = directed_distance(d, x, s) == Distance::finite(1);
            REQUIRE(hood.contains(x) == at_one);
        }
    }
}

TEST_CASE("induced_subgraph on the named examples") {
    const auto sub = induced_subgraph(cycle3, VertexSet(3, {0, 1}));
    REQUIRE(sub.graph.vertex_count() == 2);
    REQUIRE(sub.graph.arcs() == std::vector<std::pair<int, int>>{{0, 1}});
    REQUIRE(sub.original == std::vector<int>{0, 1});
    REQUIRE(sub.index_of == std::vector<int>{0, 1, -1});

    const auto full = induced_subgraph(cycle3, VertexSet::all(3));
    REQUIRE(full.graph == cycle3);
    REQUIRE(full.index_of == std::vector<int>{0, 1, 2});

    const auto empty = induced_subgraph(cycle3, VertexSet(3));
    REQUIRE(empty.graph.vertex_count() == 0);
}

TEST_CASE("induced subgraphs never shorten distances") {
    SplitMix64 rng(16);
    for (int trial = 0; trial < 50; ++trial) {
        const Digraph d = qktest::random_digraph(rng, 12, 3);
        const int n = d.vertex_count();
        const auto members =
            qktest::mask_members(n, static_cast<std::uint32_t>(rng.next()) & ((1u << n) - 1));
        const VertexSet s(n, members);
        const auto sub = induced_subgraph(d, s);
        const int m = sub.graph.vertex_count();
        if (m == 0) continue;
        const std::uint32_t inner = static_cast<std::uint32_t>(rng.next()) & ((1u << m) - 1);
        const auto inner_members = qktest::mask_members(m, inner);
        std::vector<int> outer_members;
        for (int i : inner_members) outer_members.push_back(sub.original[i]);
        const auto sub_dist = distances_to(sub.graph, VertexSet(m, inner_members));
        const auto full_dist = distances_to(d, VertexSet(n, outer_members));
        for (int i = 0; i < m; ++i)
            REQUIRE(full_dist[sub.original[i]] <= sub_dist[i]);
    }
}

TEST_CASE("max_out_degree on the named examples") {
    REQUIRE(max_out_degree(cycle3) == 1);
    REQUIRE(max_out_degree(paley_tournament(7)) == 3);
    REQUIRE(max_out_degree(Digraph(5, {})) == 0);
    REQUIRE(max_out_degree(Digraph()) == 0);
}

TEST_CASE("VertexSet behaves like a checked bitset") {
    VertexSet s(4, {1, 3});
    REQUIRE(s.count() == 2);
    REQUIRE(s.contains(3));
    REQUIRE_FALSE(s.contains(0));
    REQUIRE_FALSE(s.contains(9));
    s.insert(0);
    s.erase(3);
    REQUIRE(s.members() == std::vector<int>{0, 1});
    REQUIRE(s.complement().members() == std::vector<int>{2, 3});
    REQUIRE_THROWS_AS(s.insert(4), argument_error);
    REQUIRE_THROWS_AS(s.erase(-1), argument_error);
    REQUIRE_THROWS_AS(VertexSet(3) | VertexSet(4), argument_error);
    REQUIRE((VertexSet(3, {0, 1}) - VertexSet(3, {1})) == VertexSet(3, {0}));
    REQUIRE((VertexSet(3, {0, 1}) & VertexSet(3, {1, 2})) == VertexSet(3, {1}));
}

TEST_CASE("Distance orders with infinity on top") {
    REQUIRE(Distance::finite(2) < Distance::infinite());
    REQUIRE(Distance::finite(1) < Distance::finite(2));
    REQUIRE(Distance::infinite() == Distance::infinite());
    REQUIRE_FALSE(Distance::infinite() < Distance::infinite());
    REQUIRE(Distance::finite(5).at_most(5));
    REQUIRE_FALSE(Distance::infinite().at_most(1000));
    REQUIRE_THROWS_AS(Distance::infinite().value(), error);
}
