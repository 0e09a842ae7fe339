#include "kprod/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace kprod {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
    // Reject the top partial block so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

bool bernoulli(Rng& rng, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("probability outside [0, 1]");
    const std::uint64_t x = rng();
    if (p >= 1.0) return true;
    // p * 2^64 without overflow: compare the top 53 bits against p * 2^53.
    const auto threshold = static_cast<std::uint64_t>(std::ldexp(p, 53));
    return (x >> 11) < threshold;
}

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw GraphError("edge probability must lie in [0, 1]");
}

std::vector<Edge> sample_pairs(int n, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (bernoulli(rng, p)) edges.push_back({u, v});
        }
    }
    return edges;
}

std::vector<Edge> sample_cross_pairs(int a, int b, double p, Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u) {
        for (Vertex v = a; v < a + b; ++v) {
            if (bernoulli(rng, p)) edges.push_back({u, v});
        }
    }
    return edges;
}

/// Uniform labelled tree on n >= 2 vertices via Prüfer decoding.
std::vector<Edge> random_tree(int n, Rng& rng) {
    if (n < 2) return {};
    std::vector<int> code(static_cast<std::size_t>(n - 2));
    for (int& c : code) c = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int c : code) ++degree[c];
    std::vector<Edge> edges;
    for (int c : code) {
        const auto leaf = static_cast<Vertex>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
        edges.push_back({leaf, c});
        --degree[leaf];
        --degree[c];
    }
    std::vector<Vertex> last;
    for (Vertex v = 0; v < n; ++v) {
        if (degree[v] == 1) last.push_back(v);
    }
    edges.push_back({last[0], last[1]});
    return edges;
}

/// Random spanning tree of K_{a,b}: shuffle, then attach each vertex to a
/// random already-placed vertex of the other class.
std::vector<Edge> random_bipartite_tree(int a, int b, Rng& rng) {
    std::vector<Vertex> order(static_cast<std::size_t>(a + b));
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t k = order.size(); k > 1; --k) {
        std::swap(order[k - 1], order[uniform_below(rng, k)]);
    }
    std::vector<Vertex> placed_left{0};
    std::vector<Vertex> placed_right{a};
    std::vector<Edge> edges{{0, a}};
    for (Vertex v : order) {
        if (v == 0 || v == a) continue;
        auto& other = v < a ? placed_right : placed_left;
        edges.push_back({v, other[uniform_below(rng, other.size())]});
        (v < a ? placed_left : placed_right).push_back(v);
    }
    return edges;
}

}  // namespace

Graph random_graph(int n, double p, std::uint64_t seed) {
    if (n < 1) throw GraphError("random graph needs n >= 1");
    check_probability(p);
    Rng rng(seed);
    return Graph::build(n, sample_pairs(n, p, rng));
}

Graph random_connected_graph(int n, double p, std::uint64_t seed, int retries) {
    if (n < 1) throw GraphError("random graph needs n >= 1");
    check_probability(p);
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int attempt = 0; attempt < std::max(retries, 1); ++attempt) {
        edges = sample_pairs(n, p, rng);
        Graph g = Graph::build(n, edges);
        if (is_connected(g)) return g;
    }
    if (p == 0.0) {
        throw GraphError("no connected sample after " + std::to_string(retries) + " retries with p = 0");
    }
    const auto tree = random_tree(n, rng);
    edges.insert(edges.end(), tree.begin(), tree.end());
    return Graph::build(n, edges);
}

Graph random_bipartite_graph(int a, int b, double p, std::uint64_t seed) {
    if (a < 0 || b < 0 || a + b < 1) throw GraphError("bipartite graph needs a, b >= 0 and a + b >= 1");
    check_probability(p);
    Rng rng(seed);
    return Graph::build(a + b, sample_cross_pairs(a, b, p, rng));
}

Graph random_connected_bipartite_graph(int a, int b, double p, std::uint64_t seed, int retries) {
    if (a < 0 || b < 0 || a + b < 1) throw GraphError("bipartite graph needs a, b >= 0 and a + b >= 1");
    if (a + b >= 2 && (a == 0 || b == 0)) throw GraphError("connected bipartite graph needs both classes nonempty");
    check_probability(p);
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int attempt = 0; attempt < std::max(retries, 1); ++attempt) {
        edges = sample_cross_pairs(a, b, p, rng);
        Graph g = Graph::build(a + b, edges);
        if (is_connected(g)) return g;
    }
    if (p == 0.0) {
        throw GraphError("no connected sample after " + std::to_string(retries) + " retries with p = 0");
    }
    const auto tree = random_bipartite_tree(a, b, rng);
    edges.insert(edges.end(), tree.begin(), tree.end());
    return Graph::build(a + b, edges);
}

}  // namespace kprod
