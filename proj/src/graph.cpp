#include "kprod/graph.hpp"

#include <algorithm>
#include <deque>

namespace kprod {

Graph Graph::build(int vertex_count, std::span<const Edge> edges) {
    if (vertex_count < 0) {
        throw GraphError("vertex count must be nonnegative, got " + std::to_string(vertex_count));
    }
    Graph g;
    g.vertex_count_ = vertex_count;
    g.words_per_row_ = (static_cast<std::size_t>(vertex_count) + 63) / 64;
    g.adjacency_.resize(static_cast<std::size_t>(vertex_count));
    g.rows_.assign(g.words_per_row_ * static_cast<std::size_t>(vertex_count), 0);

    for (const Edge& e : edges) {
        if (!g.contains(e.u) || !g.contains(e.v)) {
            throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") has an endpoint outside 0.." + std::to_string(vertex_count - 1));
        }
        if (e.u == e.v) {
            throw GraphError("loop at vertex " + std::to_string(e.u));
        }
        if (g.adjacent(e.u, e.v)) continue;
        g.rows_[g.row_offset(e.u) + static_cast<std::size_t>(e.v) / 64] |= std::uint64_t{1} << (e.v % 64);
        g.rows_[g.row_offset(e.v) + static_cast<std::size_t>(e.u) / 64] |= std::uint64_t{1} << (e.u % 64);
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
        ++g.edge_count_;
    }
    for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < vertex_count_; ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

int min_degree(const Graph& g) {
    if (g.empty()) throw GraphError("minimum degree of the empty graph is undefined");
    int best = g.degree(0);
    for (Vertex u = 1; u < g.vertex_count(); ++u) best = std::min(best, g.degree(u));
    return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (label[root] >= 0) continue;
        const int id = static_cast<int>(out.size());
        auto& members = out.emplace_back();
        label[root] = id;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            members.push_back(x);
            for (Vertex y : g.neighbors(x)) {
                if (label[y] < 0) {
                    label[y] = id;
                    stack.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
    }
    return out;
}

int component_count_without(const Graph& g, const std::vector<char>& removed) {
    std::vector<char> seen(removed);
    std::vector<Vertex> stack;
    int count = 0;
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (seen[root]) continue;
        ++count;
        seen[root] = 1;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : g.neighbors(x)) {
                if (!seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
    }
    return count;
}

bool is_connected(const Graph& g) {
    if (g.empty()) return false;
    return component_count_without(g, std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 0)) == 1;
}

OddCycleStatus odd_cycle_status(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    std::vector<int> colour(n, -1);
    std::vector<Vertex> parent(n, -1);
    std::vector<int> depth(n, 0);
    std::deque<Vertex> queue;

    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        if (colour[root] >= 0) continue;
        colour[root] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : g.neighbors(x)) {
                if (colour[y] < 0) {
                    colour[y] = 1 - colour[x];
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    queue.push_back(y);
                    continue;
                }
                if (colour[y] != colour[x]) continue;
                // BFS tree edge conflict: walk both ends up to their common
                // ancestor. Equal colours mean equal depth parity, so the
                // two tree paths plus xy close an odd cycle.
                std::vector<Vertex> up_x{x};
                std::vector<Vertex> up_y{y};
                Vertex a = x;
                Vertex b = y;
                while (depth[a] > depth[b]) up_x.push_back(a = parent[a]);
                while (depth[b] > depth[a]) up_y.push_back(b = parent[b]);
                while (a != b) {
                    up_x.push_back(a = parent[a]);
                    up_y.push_back(b = parent[b]);
                }
                up_y.pop_back();  // common ancestor already in up_x
                OddCycleStatus status;
                status.bipartite = false;
                status.odd_cycle = std::move(up_x);
                status.odd_cycle.insert(status.odd_cycle.end(), up_y.rbegin(), up_y.rend());
                return status;
            }
        }
    }

    OddCycleStatus status;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        (colour[v] == 0 ? status.left : status.right).push_back(v);
    }
    return status;
}

bool certifies(const Graph& g, const OddCycleStatus& status) {
    if (status.bipartite) {
        std::vector<int> side(static_cast<std::size_t>(g.vertex_count()), -1);
        for (Vertex v : status.left) {
            if (!g.contains(v) || side[v] >= 0) return false;
            side[v] = 0;
        }
        for (Vertex v : status.right) {
            if (!g.contains(v) || side[v] >= 0) return false;
            side[v] = 1;
        }
        if (std::find(side.begin(), side.end(), -1) != side.end()) return false;
        for (const Edge& e : g.edges()) {
            if (side[e.u] == side[e.v]) return false;
        }
        return true;
    }
    const auto& cycle = status.odd_cycle;
    if (cycle.size() < 3 || cycle.size() % 2 == 0) return false;
    std::vector<Vertex> sorted(cycle);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Vertex a = cycle[i];
        const Vertex b = cycle[(i + 1) % cycle.size()];
        if (!g.contains(a) || !g.contains(b) || !g.adjacent(a, b)) return false;
    }
    return true;
}

VertexDeletion delete_vertex(const Graph& g, Vertex u) {
    if (g.vertex_count() < 2) {
        throw GraphError("vertex deletion needs at least 2 vertices, graph has " +
                         std::to_string(g.vertex_count()));
    }
    if (!g.contains(u)) throw GraphError("vertex " + std::to_string(u) + " out of range");
    VertexDeletion out;
    out.original.reserve(static_cast<std::size_t>(g.vertex_count() - 1));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v != u) out.original.push_back(v);
    }
    out.graph = induced_subgraph(g, out.original);
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    const std::vector<Vertex> keep = normalize_vertex_set(g, vertices);
    std::vector<int> relabel(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t k = 0; k < keep.size(); ++k) relabel[keep[k]] = static_cast<int>(k);
    std::vector<Edge> edges;
    for (Vertex u : keep) {
        for (Vertex v : g.neighbors(u)) {
            if (u < v && relabel[v] >= 0) edges.push_back({relabel[u], relabel[v]});
        }
    }
    return Graph::build(static_cast<int>(keep.size()), edges);
}

std::vector<Vertex> normalize_vertex_set(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> out(vertices.begin(), vertices.end());
    for (Vertex v : out) {
        if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace kprod
