#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "kprod/report.hpp"
#include "kprod/theorem.hpp"

namespace kprod {

enum class SweepMode { exhaustive, random };

/// A batch of checks over many factor graphs.
///
/// Exhaustive mode visits every labelled graph on min_vertices..max_vertices
/// vertices (at most 7). Random mode draws `sample_count` G(m, p) graphs
/// with m uniform in [min_vertices, max_vertices].
struct SweepConfig {
    int max_vertices = 4;
    int min_vertices = 1;
    std::vector<int> n_values{3};
    SweepMode mode = SweepMode::exhaustive;
    int sample_count = 1;
    std::uint64_t seed = 0;
    DirectOracle oracle = DirectOracle::flow;
    double edge_probability = 0.5;
    int separator_samples = 1;
    int brute_cap = kDefaultBruteForceCap;
    /// Off by default so that identical configs give byte-identical output.
    bool record_timing = false;
};

/// Throws std::invalid_argument naming the first violated constraint.
void validate(const SweepConfig& config);

/// Missing keys take the defaults above; unknown keys are rejected.
SweepConfig sweep_config_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const SweepConfig& config);

/// Every check for one factor graph, in a fixed order:
/// deletion_bounds, oracle_equivalence (brute/both oracles), then per n:
/// theorem_equality, degree_product, weichsel, witness_soundness and the two
/// quotient lemmas (the last three only when κ(G) > 0).
std::vector<VerificationReport> instance_reports(const Graph& g, std::uint64_t instance_seed,
                                                 const SweepConfig& config);

/// Number of factor graphs the sweep visits.
std::uint64_t instance_count(const SweepConfig& config);

/// The graph for instance `index` (a labelled-graph mask in exhaustive mode,
/// a seeded draw in random mode).
Graph instance_graph(const SweepConfig& config, std::uint64_t index);

/// Instances evaluated concurrently; reports concatenated in instance order.
std::vector<VerificationReport> run_sweep(const SweepConfig& config);

/// Single-threaded reference; output identical to run_sweep.
std::vector<VerificationReport> run_sweep_serial(const SweepConfig& config);

/// Streams JSON lines in instance order while evaluating chunks in parallel;
/// returns true iff every report passed.
bool stream_sweep(const SweepConfig& config, std::ostream& out);

}  // namespace kprod
