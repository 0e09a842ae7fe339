#include "kprod/sweep.hpp"

#include <algorithm>
#include <stdexcept>

#include "kprod/product.hpp"
#include "kprod/random.hpp"
#include "kprod/report_json.hpp"

namespace kprod {

namespace {

constexpr int kMaxExhaustiveVertices = 7;
constexpr std::uint64_t kStreamChunk = 512;

std::uint64_t labelled_graph_count(int m) {
    return std::uint64_t{1} << (m * (m - 1) / 2);
}

Graph graph_from_mask(int m, std::uint64_t mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (Vertex j = 1; j < m; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            if ((mask >> bit) & 1U) edges.push_back({i, j});
        }
    }
    return Graph::build(m, edges);
}

const char* oracle_name(DirectOracle o) {
    switch (o) {
        case DirectOracle::flow: return "flow";
        case DirectOracle::brute: return "brute";
        case DirectOracle::both: return "both";
    }
    return "?";
}

std::vector<VerificationReport> evaluate_range(const SweepConfig& config, std::uint64_t begin, std::uint64_t end,
                                               bool parallel) {
    const auto count = static_cast<std::int64_t>(end - begin);
    std::vector<std::vector<VerificationReport>> per_instance(static_cast<std::size_t>(count));
    // Exceptions cannot leave an OpenMP region; park the first one and rethrow.
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4) if (parallel)
    for (std::int64_t k = 0; k < count; ++k) {
        try {
            const std::uint64_t index = begin + static_cast<std::uint64_t>(k);
            per_instance[static_cast<std::size_t>(k)] =
                instance_reports(instance_graph(config, index), derive_seed(config.seed, index), config);
        } catch (...) {
#pragma omp critical(kprod_sweep_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<VerificationReport> out;
    for (auto& reports : per_instance) {
        std::move(reports.begin(), reports.end(), std::back_inserter(out));
    }
    return out;
}

}  // namespace

void validate(const SweepConfig& config) {
    auto fail = [](const std::string& what) { throw std::invalid_argument("invalid sweep config: " + what); };
    if (config.min_vertices < 1) fail("min_vertices must be at least 1");
    if (config.max_vertices < config.min_vertices) fail("max_vertices must be at least min_vertices");
    if (config.mode == SweepMode::exhaustive && config.max_vertices > kMaxExhaustiveVertices) {
        fail("exhaustive mode requires max_vertices <= " + std::to_string(kMaxExhaustiveVertices));
    }
    if (config.sample_count < 1) fail("sample_count must be at least 1");
    if (config.n_values.empty()) fail("n_values must not be empty");
    for (int n : config.n_values) {
        if (n < 3) fail("every n must be at least 3 (got " + std::to_string(n) + ")");
    }
    if (!(config.edge_probability >= 0.0 && config.edge_probability <= 1.0)) {
        fail("edge_probability must lie in [0, 1]");
    }
    if (config.separator_samples < 0) fail("separator_samples must be nonnegative");
    if (config.brute_cap < 1 || config.brute_cap > 30) fail("brute_cap must lie in 1..30");
    if (config.oracle == DirectOracle::brute) {
        const int largest = config.max_vertices * *std::max_element(config.n_values.begin(), config.n_values.end());
        if (largest > config.brute_cap) {
            fail("brute oracle needs every product within brute_cap (" + std::to_string(largest) + " > " +
                 std::to_string(config.brute_cap) + "); use oracle \"both\"");
        }
    }
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
    static const std::vector<std::string> known{"max_vertices",   "min_vertices", "n_values",
                                                "mode",           "sample_count", "seed",
                                                "oracle",         "edge_probability", "separator_samples",
                                                "brute_cap",      "record_timing"};
    if (!j.is_object()) throw std::invalid_argument("sweep config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw std::invalid_argument("unknown sweep config key '" + key + "'");
        }
    }
    SweepConfig c;
    c.max_vertices = j.value("max_vertices", c.max_vertices);
    c.min_vertices = j.value("min_vertices", c.min_vertices);
    c.n_values = j.value("n_values", c.n_values);
    c.sample_count = j.value("sample_count", c.sample_count);
    c.seed = j.value("seed", c.seed);
    c.edge_probability = j.value("edge_probability", c.edge_probability);
    c.separator_samples = j.value("separator_samples", c.separator_samples);
    c.brute_cap = j.value("brute_cap", c.brute_cap);
    c.record_timing = j.value("record_timing", c.record_timing);

    const auto mode = j.value("mode", std::string("exhaustive"));
    if (mode == "exhaustive") {
        c.mode = SweepMode::exhaustive;
    } else if (mode == "random") {
        c.mode = SweepMode::random;
    } else {
        throw std::invalid_argument("mode must be \"exhaustive\" or \"random\"");
    }
    const auto oracle = j.value("oracle", std::string("flow"));
    if (oracle == "flow") {
        c.oracle = DirectOracle::flow;
    } else if (oracle == "brute") {
        c.oracle = DirectOracle::brute;
    } else if (oracle == "both") {
        c.oracle = DirectOracle::both;
    } else {
        throw std::invalid_argument("oracle must be \"brute\", \"flow\" or \"both\"");
    }
    validate(c);
    return c;
}

nlohmann::ordered_json to_json(const SweepConfig& c) {
    nlohmann::ordered_json j;
    j["max_vertices"] = c.max_vertices;
    j["min_vertices"] = c.min_vertices;
    j["n_values"] = c.n_values;
    j["mode"] = c.mode == SweepMode::exhaustive ? "exhaustive" : "random";
    j["sample_count"] = c.sample_count;
    j["seed"] = c.seed;
    j["oracle"] = oracle_name(c.oracle);
    j["edge_probability"] = c.edge_probability;
    j["separator_samples"] = c.separator_samples;
    j["brute_cap"] = c.brute_cap;
    j["record_timing"] = c.record_timing;
    return j;
}

std::uint64_t instance_count(const SweepConfig& config) {
    if (config.mode == SweepMode::random) return static_cast<std::uint64_t>(config.sample_count);
    std::uint64_t total = 0;
    for (int m = config.min_vertices; m <= config.max_vertices; ++m) total += labelled_graph_count(m);
    return total;
}

Graph instance_graph(const SweepConfig& config, std::uint64_t index) {
    if (config.mode == SweepMode::random) {
        Rng rng(derive_seed(config.seed, index));
        const auto span = static_cast<std::uint64_t>(config.max_vertices - config.min_vertices + 1);
        const int m = config.min_vertices + static_cast<int>(uniform_below(rng, span));
        return random_graph(m, config.edge_probability, rng());
    }
    for (int m = config.min_vertices; m <= config.max_vertices; ++m) {
        const std::uint64_t count = labelled_graph_count(m);
        if (index < count) return graph_from_mask(m, index);
        index -= count;
    }
    throw std::out_of_range("sweep instance index past the end");
}

std::vector<VerificationReport> instance_reports(const Graph& g, std::uint64_t instance_seed,
                                                 const SweepConfig& config) {
    std::vector<VerificationReport> out;
    auto add = [&](VerificationReport r, std::uint64_t seed) {
        r.inputs.seed = seed;
        if (!config.record_timing) r.elapsed_ms = 0;
        out.push_back(std::move(r));
    };

    const int m = g.vertex_count();
    if (m >= 2) add(check_deletion_bounds(g), instance_seed);
    if (config.oracle != DirectOracle::flow && m <= config.brute_cap) {
        add(check_oracle_equivalence(g, config.brute_cap), instance_seed);
    }
    const bool positive_kappa = m >= 2 && kappa(g) > 0;
    for (int n : config.n_values) {
        const Graph kn = complete_graph(n);
        add(check_theorem_equality(g, n, config.oracle, config.brute_cap), instance_seed);
        add(check_degree_product(g, kn), instance_seed);
        if (m >= 2) add(check_weichsel(g, kn), instance_seed);
        if (!positive_kappa) continue;
        add(check_witness_soundness(g, n), instance_seed);
        for (int t = 0; t < config.separator_samples; ++t) {
            const std::uint64_t sample_seed = derive_seed(instance_seed, static_cast<std::uint64_t>(n) * 4096 + t);
            Rng rng(sample_seed);
            const auto separator = sample_valid_separator(g, n, rng);
            add(check_lemma_quotient_connected(g, n, separator), sample_seed);
            add(check_lemma_layer_in_component(g, n, separator), sample_seed);
        }
    }
    return out;
}

std::vector<VerificationReport> run_sweep(const SweepConfig& config) {
    validate(config);
    return evaluate_range(config, 0, instance_count(config), true);
}

std::vector<VerificationReport> run_sweep_serial(const SweepConfig& config) {
    validate(config);
    return evaluate_range(config, 0, instance_count(config), false);
}

bool stream_sweep(const SweepConfig& config, std::ostream& out) {
    validate(config);
    const std::uint64_t total = instance_count(config);
    bool all_passed = true;
    for (std::uint64_t begin = 0; begin < total; begin += kStreamChunk) {
        const auto reports = evaluate_range(config, begin, std::min(total, begin + kStreamChunk), true);
        for (const auto& r : reports) {
            all_passed = all_passed && r.passed();
            out << to_json_line(r) << '\n';
        }
    }
    out.flush();
    return all_passed;
}

}  // namespace kprod
