#include <catch2/catch.hpp>

#include "qklab/generators.hpp"
#include "qklab/kernels.hpp"
#include "qklab/oracles.hpp"
#include "test_support.hpp"

using namespace qklab;

namespace {

const Digraph cycle3(3, {{0, 1}, {1, 2}, {2, 0}});
const Digraph cycle4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
const Digraph path3(3, {{0, 1}, {1, 2}});

}  // namespace

TEST_CASE("exact_chromatic on the named examples") {
    REQUIRE(exact_chromatic(paley_tournament(7)) == 7);  // underlying graph is K7
    const Digraph cycle5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    REQUIRE(exact_chromatic(cycle5) == 3);
    REQUIRE(exact_chromatic(Digraph(6, {})) == 1);
    REQUIRE(exact_chromatic(Digraph()) == 0);
}

TEST_CASE("exact_chromatic matches plain backtracking") {
    SplitMix64 rng(51);
    for (int trial = 0; trial < 150; ++trial) {
        const Digraph d = qktest::random_digraph(rng, 9, 4);
        REQUIRE(exact_chromatic(d) == qktest::brute_chromatic(d));
    }
    for (int n = 0; n <= 3; ++n) {
        const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1));
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            const Digraph d = qktest::digraph_from_mask(n, mask);
            REQUIRE(exact_chromatic(d) == qktest::brute_chromatic(d));
        }
    }
}

TEST_CASE("exact_chromatic never beats the constructive colorings") {
    SplitMix64 rng(52);
    for (int trial = 0; trial < 60; ++trial) {
        const Digraph d = qktest::random_digraph(rng, 18, 3);
        const int chi = exact_chromatic(d);
        REQUIRE(chi <= greedy_underlying_coloring(d).color_count());
        REQUIRE(chi <= color_bounded_out_degree(d).color_count());
    }
}

TEST_CASE("min_quasi_kernel on the named examples") {
    const auto r3 = min_quasi_kernel(cycle3);
    REQUIRE(r3.value == 1);
    REQUIRE(r3.witness == VertexSet(3, {0}));

    const auto r7 = min_quasi_kernel(paley_tournament(7));
    REQUIRE(r7.value == 1);
    REQUIRE(r7.witness == VertexSet(7, {0}));

    const auto arcless = min_quasi_kernel(Digraph(4, {}));
    REQUIRE(arcless.value == 4);
    REQUIRE(arcless.witness == VertexSet::all(4));
}

TEST_CASE("min_quasi_kernel matches full subset enumeration") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 80; ++trial) {
        const Digraph d = qktest::random_digraph(rng, 9, 3);
        const auto fast = min_quasi_kernel(d);
        const auto brute = qktest::brute_min_recurrent(d, 2, true);
        REQUIRE(brute.has_value());
        REQUIRE(fast.value == brute->first);
        REQUIRE(fast.witness.members() == brute->second);
        REQUIRE(is_independent(d, fast.witness));
        REQUIRE(recurrence_gap(d, fast.witness).at_most(2));
    }
}

TEST_CASE("kernel_search on the named examples") {
    REQUIRE_FALSE(kernel_search(cycle3).has_value());
    REQUIRE(kernel_search(cycle4) == VertexSet(4, {0, 2}));
    REQUIRE(kernel_search(path3) == VertexSet(3, {0, 2}));
}

TEST_CASE("kernel_search matches full subset enumeration") {
    SplitMix64 rng(54);
    for (int trial = 0; trial < 80; ++trial) {
        const Digraph d = qktest::random_digraph(rng, 9, 3);
        const auto fast = kernel_search(d);
        const auto brute = qktest::brute_min_recurrent(d, 1, true);
        REQUIRE(fast.has_value() == brute.has_value());
        if (fast) {
            REQUIRE(fast->members() == brute->second);
            REQUIRE(is_independent(d, *fast));
            REQUIRE(recurrence_gap(d, *fast).at_most(1));
        }
    }
}

TEST_CASE("odd-dicycle-free digraphs always have a kernel") {
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t masks = std::uint64_t{1} << (n * (n - 1));
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            const Digraph d = qktest::digraph_from_mask(n, mask);
            if (!qktest::brute_has_odd_dicycle(d)) REQUIRE(kernel_search(d).has_value());
        }
    }
}

TEST_CASE("min_out_domination on the named examples") {
    const auto r7 = min_out_domination(paley_tournament(7));
    REQUIRE(r7.value == 3);
    REQUIRE(r7.witness == VertexSet(7, {0, 1, 2}));  // lexicographically least witness
    // the hand-checked witness {0,1,3} dominates as well: 2->3, 4->1, 5->0, 6->0
    REQUIRE(recurrence_gap(paley_tournament(7), VertexSet(7, {0, 1, 3})).at_most(1));

    const auto arcless = min_out_domination(Digraph(4, {}));
    REQUIRE(arcless.value == 4);

    const auto r3 = min_out_domination(cycle3);
    REQUIRE(r3.value == 2);
    REQUIRE(r3.witness == VertexSet(3, {0, 1}));
}

TEST_CASE("min_out_domination matches full subset enumeration") {
    SplitMix64 rng(55);
    for (int trial = 0; trial < 80; ++trial) {
        const Digraph d = qktest::random_digraph(rng, 9, 3);
        const auto fast = min_out_domination(d);
        const auto brute = qktest::brute_min_recurrent(d, 1, false);
        REQUIRE(brute.has_value());
        REQUIRE(fast.value == brute->first);
        REQUIRE(fast.witness.members() == brute->second);
    }
}

TEST_CASE("edge_chromatic on the named examples") {
    REQUIRE(edge_chromatic(cycle3) == 3);  // underlying triangle

    const Digraph star(4, {{0, 1}, {0, 2}, {0, 3}});
    REQUIRE(edge_chromatic(star) == 3);

    // 2-to-1 function f(0)=f(1)=2, f(2)=f(3)=0: underlying path 1-2-0-3
    const Digraph two_one = from_functions({4, {{2, 2, 0, 0}}});
    REQUIRE(edge_chromatic(two_one) == 2);

    REQUIRE(edge_chromatic(Digraph(3, {})) == 0);
}

TEST_CASE("edge_chromatic matches backtracking and the Vizing envelope") {
    SplitMix64 rng(56);
    for (int trial = 0; trial < 80; ++trial) {
        const Digraph d = qktest::random_digraph(rng, 7, 3);
        const int fast = edge_chromatic(d);
        REQUIRE(fast == qktest::brute_edge_chromatic(d));
        const auto edges = qktest::underlying_edges(d);
        if (edges.empty()) continue;
        std::vector<int> degree(d.vertex_count(), 0);
        for (const auto& [u, v] : edges) {
            ++degree[u];
            ++degree[v];
        }
        const int delta = *std::max_element(degree.begin(), degree.end());
        REQUIRE(fast >= delta);
        REQUIRE(fast <= delta + 1);
    }
}

TEST_CASE("oracles refuse oversized inputs loudly") {
    const Digraph big(30, {});
    REQUIRE_THROWS_AS(exact_chromatic(big), resource_error);
    REQUIRE_THROWS_AS(min_quasi_kernel(big), resource_error);
    REQUIRE_THROWS_AS(kernel_search(big), resource_error);
    REQUIRE_THROWS_AS(min_out_domination(big), resource_error);
    REQUIRE_THROWS_AS(edge_chromatic(big), resource_error);
    REQUIRE(exact_chromatic(big, 30) == 1);  // explicit limit raises the bar
    REQUIRE_THROWS_AS(exact_chromatic(Digraph(70, {}), 100), resource_error);  // engine cap
}
