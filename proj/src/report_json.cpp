#include "kprod/report_json.hpp"

#include "kprod/graph_io.hpp"
#include "kprod/product.hpp"
#include "kprod/theorem.hpp"

namespace kprod {

nlohmann::ordered_json to_json(const VerificationReport& report) {
    nlohmann::ordered_json inputs;
    inputs["graph6"] = report.inputs.graphs;
    inputs["n"] = report.inputs.n ? nlohmann::ordered_json(*report.inputs.n) : nlohmann::ordered_json(nullptr);
    inputs["S"] = report.inputs.separator;
    inputs["seed"] =
        report.inputs.seed ? nlohmann::ordered_json(*report.inputs.seed) : nlohmann::ordered_json(nullptr);

    nlohmann::ordered_json computed = nlohmann::ordered_json::object();
    for (const auto& [name, value] : report.computed) {
        std::visit([&](auto v) { computed[name] = v; }, value);
    }

    nlohmann::ordered_json j;
    j["check_name"] = report.check_name;
    j["inputs"] = std::move(inputs);
    j["computed"] = std::move(computed);
    j["verdict"] = report.passed() ? "pass" : "fail";
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.check_name = j.at("check_name").get<std::string>();
    const auto& inputs = j.at("inputs");
    r.inputs.graphs = inputs.at("graph6").get<std::vector<std::string>>();
    if (!inputs.at("n").is_null()) r.inputs.n = inputs.at("n").get<int>();
    r.inputs.separator = inputs.at("S").get<std::vector<Vertex>>();
    if (!inputs.at("seed").is_null()) r.inputs.seed = inputs.at("seed").get<std::uint64_t>();
    for (const auto& [name, value] : j.at("computed").items()) {
        if (value.is_boolean()) {
            r.computed[name] = value.get<bool>();
        } else {
            r.computed[name] = value.get<std::int64_t>();
        }
    }
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict != "pass" && verdict != "fail") throw std::invalid_argument("verdict must be pass or fail");
    r.verdict = verdict == "pass" ? Verdict::pass : Verdict::fail;
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
}

std::string to_json_line(const VerificationReport& report) { return to_json(report).dump(); }

VerificationReport recheck(const VerificationReport& report) {
    const auto& in = report.inputs;
    auto graph = [&](std::size_t k) {
        if (in.graphs.size() <= k) throw std::invalid_argument("report lacks graph input " + std::to_string(k));
        return parse_graph6(in.graphs[k]);
    };
    auto n = [&] {
        if (!in.n) throw std::invalid_argument("report lacks n");
        return *in.n;
    };
    const std::string& name = report.check_name;

    VerificationReport fresh;
    if (name == "theorem_equality") {
        const bool flow = report.computed.contains("kappa_product_flow");
        const bool brute = report.computed.contains("kappa_product_brute");
        const auto oracle = flow && brute ? DirectOracle::both : brute ? DirectOracle::brute : DirectOracle::flow;
        const Graph g = graph(0);
        const int cap = std::max(kDefaultBruteForceCap, g.vertex_count() * n());
        fresh = check_theorem_equality(g, n(), oracle, brute ? cap : kDefaultBruteForceCap);
    } else if (name == "witness_soundness") {
        fresh = check_witness_soundness(graph(0), n());
    } else if (name == "lemma_quotient_connected") {
        fresh = check_lemma_quotient_connected(graph(0), n(), in.separator);
    } else if (name == "lemma_layer_in_component") {
        fresh = check_lemma_layer_in_component(graph(0), n(), in.separator);
    } else if (name == "deletion_bounds") {
        fresh = check_deletion_bounds(graph(0));
    } else if (name == "complete_factors") {
        fresh = check_special_cases(graph(0).vertex_count(), n());
    } else if (name == "oracle_equivalence") {
        const Graph g = graph(0);
        fresh = check_oracle_equivalence(g, std::max(kDefaultBruteForceCap, g.vertex_count()));
    } else if (name == "weichsel") {
        fresh = check_weichsel(graph(0), graph(1));
    } else if (name == "degree_product") {
        fresh = check_degree_product(graph(0), graph(1));
    } else {
        throw std::invalid_argument("unknown check '" + name + "'");
    }
    fresh.inputs.seed = in.seed;
    return fresh;
}

}  // namespace kprod
