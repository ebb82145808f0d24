#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qklab/coloring.hpp"
#include "qklab/digraph.hpp"

/// The JSON graph format every tool consumes and produces:
///   {"vertex_count": n, "arcs": [[u, v], ...]}
/// plus DOT export and the JSON certificate blocks.

namespace qklab {

inline nlohmann::json digraph_to_json(const Digraph& d) {
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& [x, y] : d.arcs()) arcs.push_back({x, y});
    return nlohmann::json{{"vertex_count", d.vertex_count()}, {"arcs", std::move(arcs)}};
}

inline Digraph digraph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("vertex_count") || !j.contains("arcs"))
        throw argument_error("graph JSON must be an object with vertex_count and arcs");
    if (!j["vertex_count"].is_number_integer())
        throw argument_error("vertex_count must be an integer");
    if (!j["arcs"].is_array()) throw argument_error("arcs must be an array");
    std::vector<std::pair<int, int>> arcs;
    for (const auto& a : j["arcs"]) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
            throw argument_error("each arc must be a pair of integers");
        arcs.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return Digraph(j["vertex_count"].get<int>(), arcs);
}

inline Digraph load_digraph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw argument_error(path + ": " + e.what());
    }
    return digraph_from_json(j);
}

inline void save_json(const nlohmann::json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw io_error("write to " + path + " failed");
}

/// One `u -> v;` line per arc, vertices labeled by index.
inline std::string to_dot(const Digraph& d) {
    std::ostringstream out;
    out << "digraph {\n";
    for (int v = 0; v < d.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const auto& [x, y] : d.arcs()) out << "  " << x << " -> " << y << ";\n";
    out << "}\n";
    return out.str();
}

inline nlohmann::json vertex_set_to_json(const VertexSet& s) {
    return nlohmann::json(s.members());
}

inline nlohmann::json distance_to_json(Distance d) {
    if (d.is_infinite()) return "inf";
    return d.value();
}

inline nlohmann::json coloring_to_json(const Coloring& c) {
    return nlohmann::json{{"colors", c.colors()}, {"color_count", c.color_count()}};
}

/// {"independent": bool, "gap": int | "inf"} recomputed from the core
/// predicates, never trusted from the construction.
inline nlohmann::json set_certificate(const Digraph& d, const VertexSet& s) {
    return nlohmann::json{{"independent", is_independent(d, s)},
                          {"gap", distance_to_json(recurrence_gap(d, s))}};
}

inline nlohmann::json coloring_certificate(const Digraph& d, const Coloring& c) {
    return nlohmann::json{{"proper", is_proper(d, c)}, {"color_count", c.color_count()}};
}

}  // namespace qklab
