// qklab command line: generate graph families, analyze graphs with the
// constructions and oracles, and run the certification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input, 3 I/O
// failure, 4 precondition violation.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qklab/generators.hpp"
#include "qklab/io.hpp"
#include "qklab/kernels.hpp"
#include "qklab/oracles.hpp"
#include "qklab/verify.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_bad_input = 2;
constexpr int exit_io = 3;
constexpr int exit_precondition = 4;

int oracle_limit_from_env() {
    const char* raw = std::getenv("QKLAB_ORACLE_LIMIT");
    if (!raw) return qklab::default_oracle_limit;
    try {
        const int v = std::stoi(raw);
        if (v > 0) return v;
    } catch (...) {
    }
    throw qklab::argument_error("QKLAB_ORACLE_LIMIT must be a positive integer");
}

std::vector<int> parse_int_list(const std::string& csv) {
    std::vector<int> out;
    std::size_t at = 0;
    while (at < csv.size()) {
        const std::size_t comma = csv.find(',', at);
        const std::string token = csv.substr(at, comma == std::string::npos ? comma : comma - at);
        try {
            out.push_back(std::stoi(token));
        } catch (...) {
            throw qklab::argument_error("expected a comma-separated integer list, got '" + csv + "'");
        }
        if (comma == std::string::npos) break;
        at = comma + 1;
    }
    return out;
}

/// Group specs look like "z3" or "z2xz2": a direct product of cyclic
/// factors, the first factor's index running fastest. Standard generators
/// are the units of the non-trivial factors.
qklab::Group parse_group_spec(const std::string& spec, std::vector<int>& standard_generators) {
    std::vector<int> orders;
    std::size_t at = 0;
    while (at < spec.size()) {
        if (spec[at] != 'z' && spec[at] != 'Z')
            throw qklab::argument_error("group spec must look like z3 or z2xz2, got '" + spec + "'");
        ++at;
        std::size_t end = at;
        while (end < spec.size() && std::isdigit(static_cast<unsigned char>(spec[end]))) ++end;
        if (end == at) throw qklab::argument_error("missing cyclic order in group spec '" + spec + "'");
        orders.push_back(std::stoi(spec.substr(at, end - at)));
        at = end;
        if (at < spec.size()) {
            if (spec[at] != 'x' && spec[at] != 'X')
                throw qklab::argument_error("group factors must be separated by 'x' in '" + spec + "'");
            ++at;
        }
    }
    if (orders.empty()) throw qklab::argument_error("empty group spec");

    qklab::Group group = qklab::cyclic_group(orders.front());
    for (std::size_t i = 1; i < orders.size(); ++i)
        group = qklab::direct_product(group, qklab::cyclic_group(orders[i]));

    standard_generators.clear();
    int radix = 1;
    for (int order : orders) {
        if (order > 1) standard_generators.push_back(radix);
        radix *= order;
    }
    return group;
}

void emit_json(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    qklab::save_json(j, out_path);
}

nlohmann::json analyze_task(const std::string& task, const qklab::Digraph& g,
                            const std::string& set_csv, qklab::QuasiKernelStrategy strategy,
                            int oracle_limit) {
    using nlohmann::json;
    if (task == "quasi-kernel") {
        const auto m = qklab::quasi_kernel_from_coloring(g, qklab::greedy_underlying_coloring(g));
        return json{{"set", qklab::vertex_set_to_json(m)},
                    {"certificate", qklab::set_certificate(g, m)}};
    }
    if (task == "quasi-kernel-cl") {
        const auto m = qklab::quasi_kernel_cl(g);
        return json{{"set", qklab::vertex_set_to_json(m)},
                    {"certificate", qklab::set_certificate(g, m)}};
    }
    if (task == "kernel") {
        const auto k = qklab::richardson_kernel(g);
        return json{{"set", qklab::vertex_set_to_json(k)},
                    {"certificate", qklab::set_certificate(g, k)}};
    }
    if (task == "dominate") {
        const auto dom = qklab::dominate(g, strategy);
        const auto sub = qklab::induced_subgraph(g, dom.set);
        json certificate = qklab::coloring_certificate(sub.graph, dom.coloring);
        certificate["gap"] = qklab::distance_to_json(qklab::recurrence_gap(g, dom.set));
        return json{{"set", qklab::vertex_set_to_json(dom.set)},
                    {"coloring", qklab::coloring_to_json(dom.coloring)},
                    {"certificate", certificate}};
    }
    if (task == "color") {
        const auto c = qklab::color_bounded_out_degree(g);
        return json{{"coloring", qklab::coloring_to_json(c)},
                    {"certificate", qklab::coloring_certificate(g, c)}};
    }
    if (task == "color-function") {
        const qklab::VertexSet base = set_csv.empty()
                                          ? qklab::quasi_kernel_cl(g)
                                          : qklab::VertexSet(g.vertex_count(), parse_int_list(set_csv));
        const auto c = qklab::three_color_single_function(g, base);
        return json{{"base", qklab::vertex_set_to_json(base)},
                    {"coloring", qklab::coloring_to_json(c)},
                    {"certificate", qklab::coloring_certificate(g, c)}};
    }
    if (task == "oracle:chromatic")
        return json{{"value", qklab::exact_chromatic(g, oracle_limit)}, {"witness", nullptr}};
    if (task == "oracle:min-quasi-kernel") {
        const auto r = qklab::min_quasi_kernel(g, oracle_limit);
        return json{{"value", r.value},
                    {"witness", qklab::vertex_set_to_json(r.witness)},
                    {"certificate", qklab::set_certificate(g, r.witness)}};
    }
    if (task == "oracle:kernel") {
        const auto k = qklab::kernel_search(g, oracle_limit);
        if (!k) return json{{"value", nullptr}, {"witness", nullptr}};
        return json{{"value", k->count()},
                    {"witness", qklab::vertex_set_to_json(*k)},
                    {"certificate", qklab::set_certificate(g, *k)}};
    }
    if (task == "oracle:min-out-domination") {
        const auto r = qklab::min_out_domination(g, oracle_limit);
        return json{{"value", r.value},
                    {"witness", qklab::vertex_set_to_json(r.witness)},
                    {"certificate", qklab::set_certificate(g, r.witness)}};
    }
    if (task == "oracle:edge-chromatic")
        return json{{"value", qklab::edge_chromatic(g, oracle_limit)}, {"witness", nullptr}};
    throw qklab::argument_error("unknown analyze task '" + task + "'");
}

int run_verify(const std::string& suite, const qklab::SuiteOptions& options,
               const std::string& replay_dir) {
    const qklab::SuiteReport report = qklab::run_suite(suite, options);
    std::cout << "suite " << report.suite << " seed=" << options.seed << "\n";
    for (const auto& item : report.items) {
        char head[16];
        std::snprintf(head, sizeof(head), "item %04d", item.index);
        std::cout << head << "  " << item.label;
        if (item.pass) {
            std::cout << "  PASS\n";
            continue;
        }
        std::cout << "  FAIL  " << item.detail << "\n";
        char name[64];
        std::snprintf(name, sizeof(name), "qklab-replay-%s-item%04d.json", report.suite.c_str(),
                      item.index);
        const std::string path = replay_dir + "/" + name;
        qklab::save_json(item.replay, path);
        std::cerr << "replay graph written to " << path << "\n";
    }
    std::cout << "summary " << report.passed << "/" << (report.passed + report.failed)
              << " passed\n";
    std::cerr << "elapsed " << report.seconds << "s\n";
    return report.ok() ? exit_ok : exit_verify_failed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qklab: quasi-kernels, kernels, dominating sets and colorings of finite digraphs"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "write a graph from a named family as JSON");
    generate->require_subcommand(1);
    std::string out_path;

    int paley_q = 7;
    auto* gen_paley = generate->add_subcommand("paley", "Paley tournament on Z_q (q prime, 3 mod 4)");
    gen_paley->add_option("--q", paley_q, "modulus")->required();
    gen_paley->add_option("-o,--output", out_path, "output file (stdout if omitted)");

    int rand_n = 0, rand_d = 0;
    std::uint64_t rand_seed = 0;
    auto* gen_random = generate->add_subcommand("random", "random digraph, every vertex with d out-arcs");
    gen_random->add_option("--n", rand_n, "vertex count")->required();
    gen_random->add_option("--d", rand_d, "out-degree")->required();
    gen_random->add_option("--seed", rand_seed, "64-bit seed")->required();
    gen_random->add_option("-o,--output", out_path, "output file (stdout if omitted)");

    std::vector<std::string> function_tables;
    auto* gen_functions = generate->add_subcommand("functions", "digraph generated by total functions");
    gen_functions->add_option("--table", function_tables, "function as comma-separated values, repeatable")
        ->required();
    gen_functions->add_option("-o,--output", out_path, "output file (stdout if omitted)");

    std::string group_spec = "z3", gens_csv;
    int alphabet = 2;
    auto* gen_bernoulli =
        generate->add_subcommand("bernoulli", "Bernoulli-shift Schreier digraph on A^Gamma");
    gen_bernoulli->add_option("--group", group_spec, "cyclic product, e.g. z3 or z2xz2");
    gen_bernoulli->add_option("--alphabet", alphabet, "alphabet size |A| >= 2");
    gen_bernoulli->add_option("--gens", gens_csv, "generator element indices (default: factor units)");
    gen_bernoulli->add_option("-o,--output", out_path, "output file (stdout if omitted)");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "run a construction or oracle on a graph file");
    std::string pos1, pos2, dot_path, set_csv, strategy_name = "coloring";
    analyze->add_option("task", pos1,
                        "task: quasi-kernel | quasi-kernel-cl | kernel | dominate | color | "
                        "color-function | oracle:chromatic | oracle:min-quasi-kernel | "
                        "oracle:kernel | oracle:min-out-domination | oracle:edge-chromatic");
    analyze->add_option("input", pos2, "graph JSON file");
    analyze->add_option("--dot", dot_path, "also export the input graph as DOT");
    analyze->add_option("--set", set_csv, "explicit base set for color-function");
    analyze->add_option("--strategy", strategy_name, "quasi-kernel supplier for dominate: coloring | cl");

    // verify
    auto* verify = app.add_subcommand("verify", "run a certification suite");
    std::string suite, replay_dir = ".";
    verify->add_option("suite", suite, "thm12 | thm41 | thm11 | cl | richardson | paley | kernel4 | prop33 | edge4")
        ->required();
    qklab::SuiteOptions suite_options;
    verify->add_option("--count", suite_options.count, "corpus size (0 = suite default)");
    verify->add_option("--seed", suite_options.seed, "corpus seed");
    verify->add_option("--max-n", suite_options.max_n, "largest out-degree bound (thm11)");
    verify->add_option("--replay-dir", replay_dir, "directory for failing-graph dumps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_bad_input;
    }

    try {
        if (generate->parsed()) {
            nlohmann::json j;
            if (gen_paley->parsed()) {
                j = qklab::digraph_to_json(qklab::paley_tournament(paley_q));
                j["residues"] = qklab::quadratic_residues(paley_q);
            } else if (gen_random->parsed()) {
                j = qklab::digraph_to_json(qklab::random_out_degree(rand_n, rand_d, rand_seed));
            } else if (gen_functions->parsed()) {
                qklab::FunctionSystem fs;
                for (const auto& csv : function_tables) fs.tables.push_back(parse_int_list(csv));
                fs.domain_size = static_cast<int>(fs.tables.front().size());
                j = qklab::digraph_to_json(qklab::from_functions(fs));
            } else if (gen_bernoulli->parsed()) {
                std::vector<int> gens;
                const qklab::Group group = parse_group_spec(group_spec, gens);
                if (!gens_csv.empty()) gens = parse_int_list(gens_csv);
                const auto bs = qklab::bernoulli_schreier(group, gens, alphabet);
                j = qklab::digraph_to_json(bs.graph);
                j["labels"] = bs.labels;
                j["free_part"] = qklab::vertex_set_to_json(bs.free_part);
            }
            emit_json(j, out_path);
            return exit_ok;
        }

        if (analyze->parsed()) {
            std::string task = pos1, input = pos2;
            if (input.empty()) {
                // single positional: it is the input, valid only for a pure DOT export
                task.clear();
                input = pos1;
                if (dot_path.empty())
                    throw qklab::argument_error("analyze needs a task, or --dot for a plain export");
            }
            if (input.empty()) throw qklab::argument_error("analyze needs a graph file");
            const qklab::Digraph g = qklab::load_digraph(input);
            if (!dot_path.empty()) {
                std::ofstream dot(dot_path);
                if (!dot) throw qklab::io_error("cannot open " + dot_path + " for writing");
                dot << qklab::to_dot(g);
                if (!dot) throw qklab::io_error("write to " + dot_path + " failed");
            }
            if (!task.empty()) {
                qklab::QuasiKernelStrategy strategy;
                if (strategy_name == "coloring")
                    strategy = qklab::QuasiKernelStrategy::from_coloring;
                else if (strategy_name == "cl")
                    strategy = qklab::QuasiKernelStrategy::chvatal_lovasz;
                else
                    throw qklab::argument_error("unknown strategy '" + strategy_name + "'");
                const nlohmann::json result =
                    analyze_task(task, g, set_csv, strategy, oracle_limit_from_env());
                std::cout << result.dump(2) << '\n';
            }
            return exit_ok;
        }

        if (verify->parsed()) {
            const auto& names = qklab::suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end())
                throw qklab::argument_error("unknown suite '" + suite + "'");
            suite_options.oracle_limit = oracle_limit_from_env();
            return run_verify(suite, suite_options, replay_dir);
        }
    } catch (const qklab::precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        if (!e.witness().empty()) {
            std::cerr << "witness: [";
            for (std::size_t i = 0; i < e.witness().size(); ++i)
                std::cerr << (i ? ", " : "") << e.witness()[i];
            std::cerr << "]\n";
        }
        return exit_precondition;
    } catch (const qklab::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return exit_precondition;
    } catch (const qklab::io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return exit_io;
    } catch (const qklab::argument_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return exit_verify_failed;
    }
    return exit_ok;
}
