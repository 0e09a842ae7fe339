#include "kprod/product.hpp"

#include "kprod/graph_io.hpp"

namespace kprod {

Graph complete_graph(int n) {
    if (n < 1) throw GraphError("complete graph needs n >= 1, got " + std::to_string(n));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return Graph::build(n, edges);
}

ProductGraph direct_product(const Graph& g, const Graph& h) {
    if (g.empty() || h.empty()) throw GraphError("direct product needs two nonempty factors");
    const int m = g.vertex_count();
    const int n = h.vertex_count();
    const auto left_edges = g.edges();
    const auto right_edges = h.edges();

    std::vector<Edge> edges;
    edges.reserve(2 * left_edges.size() * right_edges.size());
    for (const Edge& a : left_edges) {
        for (const Edge& b : right_edges) {
            // a = ik, b = jl gives (i,j)(k,l) and (i,l)(k,j)
            edges.push_back({a.u * n + b.u, a.v * n + b.v});
            edges.push_back({a.u * n + b.v, a.v * n + b.u});
        }
    }
    return ProductGraph(Graph::build(m * n, edges), m, n);
}

Layer layer(const ProductGraph& p, int i) {
    if (i < 0 || i >= p.left_count()) {
        throw GraphError("layer index " + std::to_string(i) + " outside 0.." +
                         std::to_string(p.left_count() - 1));
    }
    Layer out{i, {}};
    out.vertices.reserve(static_cast<std::size_t>(p.right_count()));
    for (int j = 0; j < p.right_count(); ++j) out.vertices.push_back(p.index(i, j));
    return out;
}

VerificationReport check_weichsel(const Graph& g, const Graph& h) {
    if (g.vertex_count() < 2 || h.vertex_count() < 2) {
        throw GraphError("Weichsel criterion needs nontrivial factors (at least 2 vertices each)");
    }
    return timed([&] {
        const bool product_connected = is_connected(direct_product(g, h).graph());
        const bool g_connected = is_connected(g);
        const bool h_connected = is_connected(h);
        const bool g_odd = !odd_cycle_status(g).bipartite;
        const bool h_odd = !odd_cycle_status(h).bipartite;
        const bool factor_condition = g_connected && h_connected && (g_odd || h_odd);

        VerificationReport r;
        r.check_name = "weichsel";
        r.inputs.graphs = {write_graph6(g), write_graph6(h)};
        r.computed = {{"product_connected", product_connected},
                      {"left_connected", g_connected},
                      {"right_connected", h_connected},
                      {"left_has_odd_cycle", g_odd},
                      {"right_has_odd_cycle", h_odd},
                      {"factor_condition", factor_condition}};
        r.verdict = verdict_of(product_connected == factor_condition);
        return r;
    });
}

VerificationReport check_degree_product(const Graph& g, const Graph& h) {
    if (g.empty() || h.empty()) throw GraphError("degree product check needs nonempty factors");
    return timed([&] {
        const std::int64_t delta_product = min_degree(direct_product(g, h).graph());
        const std::int64_t delta_g = min_degree(g);
        const std::int64_t delta_h = min_degree(h);

        VerificationReport r;
        r.check_name = "degree_product";
        r.inputs.graphs = {write_graph6(g), write_graph6(h)};
        r.computed = {{"delta_product", delta_product},
                      {"delta_left", delta_g},
                      {"delta_right", delta_h},
                      {"delta_left_times_right", delta_g * delta_h}};
        r.verdict = verdict_of(delta_product == delta_g * delta_h);
        return r;
    });
}

}  // namespace kprod
