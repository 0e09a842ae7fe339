#include "kprod/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "split_network.hpp"

namespace kprod {

namespace {

using detail::SplitNetwork;
using Role = SplitNetwork::Role;
using Pair = std::pair<Vertex, Vertex>;

// Below this many candidate pairs the OpenMP region costs more than it saves.
constexpr std::size_t kParallelPairThreshold = 64;

bool is_complete(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.vertex_count());
    return g.edge_count() == n * (n - 1) / 2;
}

Vertex min_degree_vertex(const Graph& g, std::span<const Role> roles) {
    Vertex best = -1;
    int best_degree = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!roles.empty() && roles[v] == Role::deleted) continue;
        int d = 0;
        for (Vertex w : g.neighbors(v)) d += roles.empty() || roles[w] != Role::deleted;
        if (d < best_degree) {
            best = v;
            best_degree = d;
        }
    }
    return best;
}

/// Pairs (s, t) whose local connectivities have the restricted connectivity
/// as their minimum. `pivot` is any live vertex; when it may be cut, the
/// minimal separators containing it are caught by a non-adjacent pair of its
/// neighbours.
std::vector<Pair> candidate_pairs(const Graph& g, Vertex pivot, std::span<const Role> roles) {
    auto live = [&](Vertex x) { return roles.empty() || roles[x] != Role::deleted; };
    std::vector<Pair> pairs;
    for (Vertex w = 0; w < g.vertex_count(); ++w) {
        if (w != pivot && live(w) && !g.adjacent(pivot, w)) pairs.emplace_back(pivot, w);
    }
    if (!roles.empty() && roles[pivot] == Role::uncuttable) return pairs;
    const auto nbrs = g.neighbors(pivot);
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
        if (!live(nbrs[a])) continue;
        for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
            if (live(nbrs[b]) && !g.adjacent(nbrs[a], nbrs[b])) pairs.emplace_back(nbrs[a], nbrs[b]);
        }
    }
    return pairs;
}

int min_local_serial(const Graph& g, std::span<const Pair> pairs, int limit, std::span<const Role> roles) {
    SplitNetwork network(g);
    int best = limit;
    for (const auto& [s, t] : pairs) {
        best = std::min(best, network.local_connectivity(s, t, best, roles));
        if (best == 0) break;
    }
    return best;
}

int min_local_parallel(const Graph& g, std::span<const Pair> pairs, int limit, std::span<const Role> roles) {
    if (pairs.size() < kParallelPairThreshold) return min_local_serial(g, pairs, limit, roles);
    int best = limit;
    const auto count = static_cast<std::int64_t>(pairs.size());
#pragma omp parallel reduction(min : best)
    {
        SplitNetwork network(g);
        int local_best = limit;
#pragma omp for schedule(dynamic, 8)
        for (std::int64_t k = 0; k < count; ++k) {
            if (local_best == 0) continue;
            const auto& [s, t] = pairs[static_cast<std::size_t>(k)];
            local_best = std::min(local_best, network.local_connectivity(s, t, local_best, roles));
        }
        best = std::min(best, local_best);
    }
    return best;
}

void require_nonempty(const Graph& g, const char* what) {
    if (g.empty()) throw GraphError(std::string(what) + " of the empty graph is undefined");
}

template <class MinLocal>
int kappa_with(const Graph& g, MinLocal&& min_local) {
    require_nonempty(g, "vertex connectivity");
    if (is_complete(g)) return g.vertex_count() - 1;
    if (!is_connected(g)) return 0;
    const Vertex pivot = min_degree_vertex(g, {});
    const auto pairs = candidate_pairs(g, pivot, {});
    return min_local(g, pairs, g.degree(pivot), std::span<const Role>{});
}

/// Does G - {deleted} have a separator of at most `budget` vertices that
/// avoids every uncuttable vertex?
bool restricted_cut_exists(const Graph& g, std::span<const Role> roles, int budget) {
    Vertex pivot = -1;
    int live = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (roles[v] == Role::deleted) continue;
        ++live;
        if (pivot < 0 || (roles[v] == Role::uncuttable && roles[pivot] != Role::uncuttable)) pivot = v;
    }
    if (live < 2) return false;
    const auto pairs = candidate_pairs(g, pivot, roles);
    if (pairs.empty()) return false;
    return min_local_parallel(g, pairs, budget + 1, roles) <= budget;
}

}  // namespace

int kappa(const Graph& g) { return kappa_with(g, min_local_parallel); }

int kappa_serial(const Graph& g) { return kappa_with(g, min_local_serial); }

CutWitness min_vertex_cut(const Graph& g) {
    require_nonempty(g, "minimum vertex cut");
    const int n = g.vertex_count();
    if (is_complete(g)) {
        CutWitness w{{}, ResidualVerdict::trivial, CutOrigin::minimum_cut};
        for (Vertex v = 0; v + 1 < n; ++v) w.vertices.push_back(v);
        return w;
    }
    const int k = kappa(g);
    if (k == 0) return {{}, ResidualVerdict::disconnected, CutOrigin::minimum_cut};

    // Greedy over vertices in increasing order: keep v in the cut iff some
    // minimum cut extends the current prefix with v while avoiding every
    // smaller vertex that was skipped.
    std::vector<Role> roles(static_cast<std::size_t>(n), Role::normal);
    CutWitness w{{}, ResidualVerdict::disconnected, CutOrigin::minimum_cut};
    for (Vertex v = 0; v < n && static_cast<int>(w.vertices.size()) < k; ++v) {
        roles[v] = Role::deleted;
        const int budget = k - static_cast<int>(w.vertices.size()) - 1;
        if (restricted_cut_exists(g, roles, budget)) {
            w.vertices.push_back(v);
        } else {
            roles[v] = Role::uncuttable;
        }
    }
    return w;
}

bool is_separator(const Graph& g, std::span<const Vertex> separator) {
    const auto members = normalize_vertex_set(g, separator);
    const int residual = g.vertex_count() - static_cast<int>(members.size());
    if (residual <= 0) return false;
    if (residual == 1) return true;
    std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v : members) removed[v] = 1;
    return component_count_without(g, removed) > 1;
}

int brute_force_kappa(const Graph& g, int cap) {
    require_nonempty(g, "vertex connectivity");
    const int n = g.vertex_count();
    if (cap > 30) throw GraphError("brute-force cap above 30 is not supported");
    if (n > cap) {
        throw GraphError("brute-force connectivity limited to " + std::to_string(cap) + " vertices, graph has " +
                         std::to_string(n));
    }
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    auto separates = [&](std::uint32_t mask) {
        const int residual = n - std::popcount(mask);
        if (residual == 1) return true;
        for (int v = 0; v < n; ++v) removed[v] = static_cast<char>((mask >> v) & 1U);
        return component_count_without(g, removed) > 1;
    };
    for (int k = 0; k < n; ++k) {
        if (k == 0) {
            if (separates(0)) return 0;
            continue;
        }
        // Gosper's hack: next integer with the same popcount.
        const std::uint32_t limit = std::uint32_t{1} << n;
        for (std::uint32_t mask = (std::uint32_t{1} << k) - 1; mask < limit;) {
            if (separates(mask)) return k;
            const std::uint32_t low = mask & -mask;
            const std::uint32_t ripple = mask + low;
            mask = (((ripple ^ mask) >> 2) / low) | ripple;
        }
    }
    return n - 1;  // unreachable: removing n-1 vertices always leaves K1
}

}  // namespace kprod
