#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kprod {

using Vertex = int;

/// Unordered vertex pair; `Graph` always stores it with first < second.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown for malformed graphs and violated operation preconditions.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..vertex_count-1.
///
/// Adjacency is kept twice: sorted neighbor lists for iteration and a dense
/// bit matrix for O(1) `adjacent` queries. Both are built once in `build`.
class Graph {
public:
    Graph() = default;

    /// Builds a graph, collapsing duplicate pairs. Loops and out-of-range
    /// endpoints throw GraphError.
    static Graph build(int vertex_count, std::span<const Edge> edges);
    static Graph build(int vertex_count, std::initializer_list<Edge> edges) {
        return build(vertex_count, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool empty() const noexcept { return vertex_count_ == 0; }

    bool adjacent(Vertex u, Vertex v) const noexcept {
        return (rows_[row_offset(u) + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
    }
    std::span<const Vertex> neighbors(Vertex u) const noexcept {
        return {adjacency_[u].data(), adjacency_[u].size()};
    }
    int degree(Vertex u) const noexcept { return static_cast<int>(adjacency_[u].size()); }

    /// Edge list sorted lexicographically with u < v in each pair.
    std::vector<Edge> edges() const;

    bool contains(Vertex u) const noexcept { return u >= 0 && u < vertex_count_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.adjacency_ == b.adjacency_;
    }

private:
    std::size_t row_offset(Vertex u) const noexcept {
        return static_cast<std::size_t>(u) * words_per_row_;
    }

    int vertex_count_ = 0;
    std::size_t edge_count_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::uint64_t> rows_;
};

/// δ(G). Throws GraphError on the empty graph.
int min_degree(const Graph& g);

/// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Component count of G with `removed[v] == true` vertices deleted.
/// `removed` must have vertex_count entries.
int component_count_without(const Graph& g, const std::vector<char>& removed);

/// False for the empty graph; true for K1.
bool is_connected(const Graph& g);

/// Either a proper 2-colouring or an odd cycle, whichever G admits.
struct OddCycleStatus {
    bool bipartite = true;
    /// Colour classes, meaningful when bipartite.
    std::vector<Vertex> left;
    std::vector<Vertex> right;
    /// Odd cycle as a vertex sequence (closing edge implied), when not bipartite.
    std::vector<Vertex> odd_cycle;
};

OddCycleStatus odd_cycle_status(const Graph& g);

/// True when `status` is a valid certificate for g (used by tests and reports).
bool certifies(const Graph& g, const OddCycleStatus& status);

/// G-u with vertices relabelled contiguously; `original[k]` is the old label of new vertex k.
struct VertexDeletion {
    Graph graph;
    std::vector<Vertex> original;
};

VertexDeletion delete_vertex(const Graph& g, Vertex u);

/// Subgraph induced by `vertices`, relabelled by ascending original label.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Sorts, deduplicates and range-checks a vertex set against g.
std::vector<Vertex> normalize_vertex_set(const Graph& g, std::span<const Vertex> vertices);

}  // namespace kprod
