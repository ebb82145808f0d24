#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "qklab/digraph.hpp"

namespace qklab {

/// Strongly connected components in reverse topological order of the
/// condensation: component 0 is a sink (no arcs leave it), and every arc
/// (u, v) between distinct components has component[u] > component[v].
struct SccPartition {
    int count = 0;
    std::vector<int> component;              // vertex -> component id
    std::vector<std::vector<int>> members;   // component id -> sorted vertices
};

/// Iterative Tarjan; emission order gives the reverse topological ids.
inline SccPartition strongly_connected_components(const Digraph& d) {
    const int n = d.vertex_count();
    SccPartition result;
    result.component.assign(static_cast<std::size_t>(n), -1);

    std::vector<int> index(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<char> on_stack(static_cast<std::size_t>(n), 0);
    std::vector<int> stack;
    std::vector<std::pair<int, int>> frames;  // (vertex, next out-neighbor position)
    int next_index = 0;

    for (int root = 0; root < n; ++root) {
        if (index[static_cast<std::size_t>(root)] != -1) continue;
        index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next_index++;
        stack.push_back(root);
        on_stack[static_cast<std::size_t>(root)] = 1;
        frames.emplace_back(root, 0);

        while (!frames.empty()) {
            const int v = frames.back().first;
            const auto& succ = d.out_neighbors(v);
            if (frames.back().second < static_cast<int>(succ.size())) {
                const int w = succ[static_cast<std::size_t>(frames.back().second++)];
                if (index[static_cast<std::size_t>(w)] == -1) {
                    index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = next_index++;
                    stack.push_back(w);
                    on_stack[static_cast<std::size_t>(w)] = 1;
                    frames.emplace_back(w, 0);
                } else if (on_stack[static_cast<std::size_t>(w)]) {
                    low[static_cast<std::size_t>(v)] =
                        std::min(low[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]);
                }
                continue;
            }
            if (low[static_cast<std::size_t>(v)] == index[static_cast<std::size_t>(v)]) {
                std::vector<int> comp;
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    result.component[static_cast<std::size_t>(w)] = result.count;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                result.members.push_back(std::move(comp));
                ++result.count;
            }
            frames.pop_back();
            if (!frames.empty()) {
                const int parent = frames.back().first;
                low[static_cast<std::size_t>(parent)] =
                    std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
            }
        }
    }
    return result;
}

}  // namespace qklab
