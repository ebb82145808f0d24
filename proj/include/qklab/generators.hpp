#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qklab/digraph.hpp"
#include "qklab/group_action.hpp"

/// Generators for the concrete digraph families the library works with:
/// digraphs of function systems, Paley tournaments, Bernoulli-shift
/// Schreier digraphs, and seeded random bounded-out-degree digraphs.

namespace qklab {

/// n total functions on a common finite domain, each a full lookup array.
struct FunctionSystem {
    int domain_size = 0;
    std::vector<std::vector<int>> tables;
};

/// Digraph with an arc x -> f_i(x) for every function, fixed points
/// dropped. Out-degree is at most the number of functions (collisions
/// f_i(x) = f_j(x) collapse).
inline Digraph from_functions(const FunctionSystem& fs) {
    if (fs.domain_size < 0) throw argument_error("from_functions: negative domain");
    std::vector<std::pair<int, int>> arcs;
    for (const auto& table : fs.tables) {
        if (static_cast<int>(table.size()) != fs.domain_size)
            throw argument_error("from_functions: table size does not match domain");
        for (int x = 0; x < fs.domain_size; ++x) {
            const int y = table[static_cast<std::size_t>(x)];
            if (y < 0 || y >= fs.domain_size)
                throw argument_error("from_functions: value " + std::to_string(y) +
                                     " outside the domain");
            if (y != x) arcs.emplace_back(x, y);
        }
    }
    return Digraph(fs.domain_size, arcs);
}

inline bool is_prime(int q) {
    if (q < 2) return false;
    for (long long f = 2; f * f <= q; ++f)
        if (q % f == 0) return false;
    return true;
}

/// Nonzero quadratic residues mod q, ascending.
inline std::vector<int> quadratic_residues(int q) {
    std::vector<char> seen(static_cast<std::size_t>(q), 0);
    for (int x = 1; x < q; ++x)
        seen[static_cast<std::size_t>((x * x) % q)] = 1;
    std::vector<int> out;
    for (int r = 1; r < q; ++r)
        if (seen[static_cast<std::size_t>(r)]) out.push_back(r);
    return out;
}

/// Paley tournament on Z_q: arc x -> y iff y - x is a nonzero quadratic
/// residue mod q. Requires q prime with q = 3 (mod 4), so that -1 is a
/// non-residue and exactly one of each arc pair is present.
inline Digraph paley_tournament(int q) {
    if (!is_prime(q))
        throw argument_error("paley_tournament: " + std::to_string(q) + " is not prime");
    if (q % 4 != 3)
        throw argument_error("paley_tournament: " + std::to_string(q) +
                             " is not congruent to 3 mod 4, residues would not orient a tournament");
    const auto residues = quadratic_residues(q);
    std::vector<char> is_residue(static_cast<std::size_t>(q), 0);
    for (int r : residues) is_residue[static_cast<std::size_t>(r)] = 1;
    std::vector<std::pair<int, int>> arcs;
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y)
            if (x != y && is_residue[static_cast<std::size_t>(((y - x) % q + q) % q)])
                arcs.emplace_back(x, y);
    return Digraph(q, arcs);
}

/// Steele & Vigna's splitmix64. Fixed here as the one stream behind every
/// seeded corpus, so generated graphs are reproducible bit for bit across
/// platforms (no standard-library distributions involved).
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// next() reduced mod bound; bound must be positive.
    std::uint32_t below(std::uint32_t bound) {
        if (bound == 0) throw argument_error("SplitMix64::below: zero bound");
        return static_cast<std::uint32_t>(next() % bound);
    }
};

/// Digraph in which every vertex gets exactly `out_degree` out-arcs to
/// distinct other vertices, drawn by rejection from splitmix64(seed).
/// Identical inputs give identical digraphs.
inline Digraph random_out_degree(int vertex_count, int out_degree, std::uint64_t seed) {
    if (vertex_count < 0) throw argument_error("random_out_degree: negative vertex count");
    if (out_degree < 0 || out_degree >= std::max(vertex_count, 1))
        throw argument_error("random_out_degree: out-degree must satisfy 0 <= d < vertex_count");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> arcs;
    for (int x = 0; x < vertex_count; ++x) {
        std::vector<char> taken(static_cast<std::size_t>(vertex_count), 0);
        int picked = 0;
        while (picked < out_degree) {
            const int y = static_cast<int>(rng.below(static_cast<std::uint32_t>(vertex_count)));
            if (y == x || taken[static_cast<std::size_t>(y)]) continue;
            taken[static_cast<std::size_t>(y)] = 1;
            arcs.emplace_back(x, y);
            ++picked;
        }
    }
    return Digraph(vertex_count, arcs);
}

/// Bernoulli shift data: the full Schreier digraph on A^Gamma, the free
/// part, and one label per point (its digit string, position h holding
/// x(h)).
struct BernoulliSchreier {
    GroupAction action;
    Digraph graph;
    VertexSet free_part;
    std::vector<std::string> labels;
};

namespace detail {

inline char digit_char(int d) {
    static const char* alphabet = "0123456789abcdefghijklmnopqrstuvwxyz";
    return alphabet[d];
}

}  // namespace detail

/// Shift action of a finite group on A^Gamma: (g.x)(h) = x(hg). Points are
/// indexed as base-|A| numerals whose digit at group-element index h is
/// x(h). Arcs run x -> s.x for the chosen generators.
inline BernoulliSchreier bernoulli_schreier(const Group& group, const std::vector<int>& generators,
                                            int alphabet_size) {
    if (alphabet_size < 2)
        throw argument_error("bernoulli_schreier: alphabet must have at least 2 symbols");
    constexpr std::uint64_t point_limit = 1u << 22;
    std::uint64_t points = 1;
    for (int i = 0; i < group.order; ++i) {
        points *= static_cast<std::uint64_t>(alphabet_size);
        if (points > point_limit)
            throw resource_error("bernoulli_schreier: |A|^|Gamma| exceeds the supported size");
    }
    const int point_count = static_cast<int>(points);

    // digit extraction: point x has digit (x / |A|^h) % |A| at position h
    std::vector<std::uint64_t> weight(static_cast<std::size_t>(group.order), 1);
    for (int h = 1; h < group.order; ++h)
        weight[static_cast<std::size_t>(h)] =
            weight[static_cast<std::size_t>(h - 1)] * static_cast<std::uint64_t>(alphabet_size);

    std::vector<std::vector<int>> table(static_cast<std::size_t>(group.order),
                                        std::vector<int>(static_cast<std::size_t>(point_count)));
    for (int g = 0; g < group.order; ++g)
        for (int x = 0; x < point_count; ++x) {
            std::uint64_t image = 0;
            for (int h = 0; h < group.order; ++h) {
                const int hg = group.mult[static_cast<std::size_t>(h)][static_cast<std::size_t>(g)];
                const int digit = static_cast<int>(
                    (static_cast<std::uint64_t>(x) / weight[static_cast<std::size_t>(hg)]) %
                    static_cast<std::uint64_t>(alphabet_size));
                image += static_cast<std::uint64_t>(digit) * weight[static_cast<std::size_t>(h)];
            }
            table[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)] = static_cast<int>(image);
        }

    GroupAction action(group, generators, std::move(table));
    Digraph graph = schreier_digraph(action);
    VertexSet free = free_part(action);

    std::vector<std::string> labels(static_cast<std::size_t>(point_count));
    const bool compact = alphabet_size <= 36;
    for (int x = 0; x < point_count; ++x) {
        std::string label;
        for (int h = 0; h < group.order; ++h) {
            const int digit = static_cast<int>(
                (static_cast<std::uint64_t>(x) / weight[static_cast<std::size_t>(h)]) %
                static_cast<std::uint64_t>(alphabet_size));
            if (compact)
                label.push_back(detail::digit_char(digit));
            else
                label += (h == 0 ? "" : ".") + std::to_string(digit);
        }
        labels[static_cast<std::size_t>(x)] = std::move(label);
    }

    return {std::move(action), std::move(graph), std::move(free), std::move(labels)};
}

}  // namespace qklab
