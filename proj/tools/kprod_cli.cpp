// kprod: vertex connectivity of direct products G x K_n.
//
//   kprod kappa <file>
//   kprod product <file> -n <n> [--emit g6|edges]
//   kprod verify-theorem <file> | --exhaustive <m>  -n <n>... [--oracle flow|brute|both]
//   kprod verify-lemmas <file> -n <n> --samples <k> --seed <s>
//   kprod witness <file> -n <n>
//   kprod sweep --config <file>
//
// Graph files hold graph6 lines or one "p <n>" edge list ('-' reads stdin).
// Checks print JSON lines; the exit status is 0 iff every verdict passed.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "kprod/connectivity.hpp"
#include "kprod/graph_io.hpp"
#include "kprod/product.hpp"
#include "kprod/report_json.hpp"
#include "kprod/sweep.hpp"
#include "kprod/theorem.hpp"

using namespace kprod;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string input;
    std::string format = "auto";
    std::vector<int> n_values;
    std::string emit = "g6";
    std::string oracle = "flow";
    std::optional<int> exhaustive;
    int samples = 10;
    std::uint64_t seed = 0;
    bool direct = false;
    std::string config;
    int threads = 0;
};

std::vector<Graph> load(const Options& o) {
    const GraphFormat format = o.format == "g6"      ? GraphFormat::graph6
                               : o.format == "edges" ? GraphFormat::edge_list
                                                     : GraphFormat::automatic;
    if (o.input == "-") return read_graphs(std::cin, format);
    std::ifstream in(o.input);
    if (!in) throw std::runtime_error("cannot open '" + o.input + "'");
    return read_graphs(in, format);
}

std::vector<Graph> exhaustive_graphs(int m) {
    SweepConfig c;
    c.min_vertices = 1;
    c.max_vertices = m;
    std::vector<Graph> out;
    const auto count = instance_count(c);
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) out.push_back(instance_graph(c, k));
    return out;
}

const char* residual_name(ResidualVerdict v) {
    return v == ResidualVerdict::trivial ? "trivial" : "disconnected";
}

const char* origin_name(CutOrigin o) {
    switch (o) {
        case CutOrigin::minimum_cut: return "minimum_cut";
        case CutOrigin::copy: return "copy";
        case CutOrigin::neighborhood: return "neighborhood";
    }
    return "?";
}

/// Theorem-path commands refuse n < 3 unless --direct is given.
bool refuse_small_n(const Options& o) {
    for (int n : o.n_values) {
        if (n >= 3) continue;
        if (n < 1) {
            std::cerr << "error: n must be positive (got " << n << ")\n";
            return true;
        }
        if (!o.direct) {
            std::cerr << "FormulaInapplicable: " << FormulaInapplicable(n).what() << "\n"
                      << "hint: pass --direct to compute kappa(G x K_" << n << ") on the product itself\n";
            return true;
        }
    }
    return false;
}

nlohmann::ordered_json direct_product_record(const Graph& g, int n) {
    const Graph product = direct_product(g, complete_graph(n)).graph();
    const CutWitness cut = min_vertex_cut(product);
    nlohmann::ordered_json j;
    j["graph6"] = write_graph6(g);
    j["n"] = n;
    j["kappa_product"] = cut.vertices.size();
    j["S"] = cut.vertices;
    j["residual"] = residual_name(cut.residual_verdict);
    return j;
}

int emit(const VerificationReport& r, bool& all_passed) {
    std::cout << to_json_line(r) << '\n';
    all_passed = all_passed && r.passed();
    return 0;
}

int cmd_kappa(const Options& o) {
    for (const Graph& g : load(o)) {
        const CutWitness cut = min_vertex_cut(g);
        nlohmann::ordered_json j;
        j["graph6"] = write_graph6(g);
        j["vertices"] = g.vertex_count();
        j["edges"] = g.edge_count();
        j["kappa"] = cut.vertices.size();
        j["min_degree"] = min_degree(g);
        j["S"] = cut.vertices;
        j["residual"] = residual_name(cut.residual_verdict);
        std::cout << j.dump() << '\n';
    }
    return 0;
}

int cmd_product(const Options& o) {
    if (o.n_values.size() != 1 || o.n_values[0] < 1) {
        std::cerr << "error: product needs exactly one n >= 1\n";
        return kExitUsage;
    }
    for (const Graph& g : load(o)) {
        const Graph p = direct_product(g, complete_graph(o.n_values[0])).graph();
        std::cout << (o.emit == "edges" ? write_edge_list(p) : write_graph6(p) + "\n");
    }
    return 0;
}

int cmd_verify_theorem(const Options& o) {
    if (o.input.empty() == !o.exhaustive.has_value()) {
        std::cerr << "error: give either a graph file or --exhaustive <m>\n";
        return kExitUsage;
    }
    if (refuse_small_n(o)) return kExitUsage;
    const DirectOracle oracle = o.oracle == "brute"  ? DirectOracle::brute
                                : o.oracle == "both" ? DirectOracle::both
                                                     : DirectOracle::flow;
    const auto graphs = o.exhaustive ? exhaustive_graphs(*o.exhaustive) : load(o);
    bool all_passed = true;
    for (const Graph& g : graphs) {
        for (int n : o.n_values) {
            if (n < 3) {
                std::cout << direct_product_record(g, n).dump() << '\n';
                continue;
            }
            emit(check_theorem_equality(g, n, oracle), all_passed);
            if (g.vertex_count() >= 2 && is_connected(g)) emit(check_witness_soundness(g, n), all_passed);
        }
    }
    return all_passed ? 0 : kExitFail;
}

int cmd_verify_lemmas(const Options& o) {
    if (refuse_small_n(o)) return kExitUsage;
    bool all_passed = true;
    std::uint64_t index = 0;
    for (const Graph& g : load(o)) {
        const std::uint64_t instance_seed = derive_seed(o.seed, index++);
        auto tagged = [&](VerificationReport r, std::uint64_t seed) {
            r.inputs.seed = seed;
            emit(r, all_passed);
        };
        if (g.vertex_count() >= 2) tagged(check_deletion_bounds(g), instance_seed);
        const bool positive_kappa = g.vertex_count() >= 2 && kappa(g) > 0;
        for (int n : o.n_values) {
            const Graph kn = complete_graph(n);
            tagged(check_degree_product(g, kn), instance_seed);
            if (g.vertex_count() >= 2 && n >= 2) tagged(check_weichsel(g, kn), instance_seed);
            if (n < 3 || !positive_kappa) continue;
            for (int t = 0; t < o.samples; ++t) {
                const std::uint64_t sample_seed = derive_seed(instance_seed, static_cast<std::uint64_t>(n) * 4096 + t);
                Rng rng(sample_seed);
                const auto s = sample_valid_separator(g, n, rng);
                tagged(check_lemma_quotient_connected(g, n, s), sample_seed);
                tagged(check_lemma_layer_in_component(g, n, s), sample_seed);
            }
        }
    }
    return all_passed ? 0 : kExitFail;
}

int cmd_witness(const Options& o) {
    if (refuse_small_n(o)) return kExitUsage;
    bool all_passed = true;
    for (const Graph& g : load(o)) {
        for (int n : o.n_values) {
            if (n < 3) {
                std::cout << direct_product_record(g, n).dump() << '\n';
                continue;
            }
            const auto f = formula_kappa_product(kappa(g), min_degree(g), n);
            const CutWitness w = witness_cut(g, n);
            const bool separates = is_separator(direct_product(g, complete_graph(n)).graph(), w.vertices);
            all_passed = all_passed && separates && static_cast<std::int64_t>(w.vertices.size()) == f.value;
            nlohmann::ordered_json j;
            j["graph6"] = write_graph6(g);
            j["n"] = n;
            j["branch"] = origin_name(w.origin);
            j["formula"] = f.value;
            j["size"] = w.vertices.size();
            j["S"] = w.vertices;
            j["residual"] = residual_name(w.residual_verdict);
            j["is_separator"] = separates;
            std::cout << j.dump() << '\n';
        }
    }
    return all_passed ? 0 : kExitFail;
}

int cmd_sweep(const Options& o) {
    std::ifstream in(o.config);
    if (!in) throw std::runtime_error("cannot open config '" + o.config + "'");
    const SweepConfig config = sweep_config_from_json(nlohmann::json::parse(in));
    return stream_sweep(config, std::cout) ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vertex connectivity of direct products G x K_n"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--threads", o.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);

    auto add_input = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("file", o.input, "graph6 lines or a 'p <n>' edge list; '-' for stdin");
        if (required) opt->required();
        sub->add_option("--format", o.format, "input format")
            ->check(CLI::IsMember({"auto", "g6", "edges"}));
    };
    auto add_n = [&](CLI::App* sub, bool many) {
        auto* opt = sub->add_option("-n,--n", o.n_values, "order of the complete factor K_n")->required();
        if (!many) opt->expected(1);
        sub->add_flag("--direct", o.direct, "for n < 3, compute on the product instead of the closed form");
    };

    auto* kappa_cmd = app.add_subcommand("kappa", "exact connectivity and lexicographically first minimum cut");
    add_input(kappa_cmd, true);

    auto* product_cmd = app.add_subcommand("product", "emit G x K_n");
    add_input(product_cmd, true);
    product_cmd->add_option("-n,--n", o.n_values, "order of K_n")->required()->expected(1);
    product_cmd->add_option("--emit", o.emit, "output format")->check(CLI::IsMember({"g6", "edges"}));

    auto* theorem_cmd = app.add_subcommand("verify-theorem", "closed form against direct connectivity");
    add_input(theorem_cmd, false);
    theorem_cmd->add_option("--exhaustive", o.exhaustive, "all labelled graphs on 1..m vertices")
        ->check(CLI::Range(1, 7));
    add_n(theorem_cmd, true);
    theorem_cmd->add_option("--oracle", o.oracle, "connectivity oracle for the product")
        ->check(CLI::IsMember({"flow", "brute", "both"}));

    auto* lemmas_cmd = app.add_subcommand("verify-lemmas", "product, quotient and deletion lemma checks");
    add_input(lemmas_cmd, true);
    add_n(lemmas_cmd, true);
    lemmas_cmd->add_option("--samples", o.samples, "sampled separators per graph and n")
        ->check(CLI::NonNegativeNumber);
    lemmas_cmd->add_option("--seed", o.seed, "base seed");

    auto* witness_cmd = app.add_subcommand("witness", "separator of size min{n kappa, (n-1) delta}");
    add_input(witness_cmd, true);
    add_n(witness_cmd, true);

    auto* sweep_cmd = app.add_subcommand("sweep", "run a JSON-configured verification sweep");
    sweep_cmd->add_option("--config", o.config, "sweep config (JSON)")->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);
    if (o.threads > 0) omp_set_num_threads(o.threads);

    try {
        if (*kappa_cmd) return cmd_kappa(o);
        if (*product_cmd) return cmd_product(o);
        if (*theorem_cmd) return cmd_verify_theorem(o);
        if (*lemmas_cmd) return cmd_verify_lemmas(o);
        if (*witness_cmd) return cmd_witness(o);
        if (*sweep_cmd) return cmd_sweep(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
