#pragma once

#include <utility>
#include <vector>

#include "kprod/graph.hpp"
#include "kprod/report.hpp"

namespace kprod {

/// K_n. Throws GraphError for n < 1.
Graph complete_graph(int n);

/// G×H together with the row-major labelling (i, j) -> i * right_count + j.
class ProductGraph {
public:
    ProductGraph(Graph graph, int left_count, int right_count)
        : graph_(std::move(graph)), left_count_(left_count), right_count_(right_count) {}

    const Graph& graph() const noexcept { return graph_; }
    int left_count() const noexcept { return left_count_; }
    int right_count() const noexcept { return right_count_; }

    Vertex index(int left, int right) const noexcept { return left * right_count_ + right; }
    std::pair<int, int> coordinates(Vertex v) const noexcept {
        return {v / right_count_, v % right_count_};
    }

private:
    Graph graph_;
    int left_count_;
    int right_count_;
};

/// The layer S_i = {u_i} × V(H): a contiguous index range under the labelling.
struct Layer {
    int left_index = 0;
    std::vector<Vertex> vertices;
};

/// Direct (tensor) product. Both factors must be nonempty.
ProductGraph direct_product(const Graph& g, const Graph& h);

/// Throws GraphError when i is not a valid left coordinate.
Layer layer(const ProductGraph& p, int i);

/// Compares connectivity of G×H against "both connected and one has an odd
/// cycle". Both factors need at least 2 vertices.
VerificationReport check_weichsel(const Graph& g, const Graph& h);

/// Compares δ(G×H) with δ(G)·δ(H).
VerificationReport check_degree_product(const Graph& g, const Graph& h);

}  // namespace kprod
