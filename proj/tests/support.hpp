#pragma once

// Named graphs, labelled-graph enumeration and slow reference routines used
// as oracles. Nothing here calls into the flow or colouring code paths.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "kprod/graph.hpp"

namespace kprod::test {

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Graph::build(n, e);
}

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph::build(n, e);
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u) {
        for (int v = a; v < a + b; ++v) e.push_back({u, v});
    }
    return Graph::build(a + b, e);
}

inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});          // outer cycle
        e.push_back({i, i + 5});                // spokes
        e.push_back({5 + i, 5 + (i + 2) % 5});  // inner pentagram
    }
    return Graph::build(10, e);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    auto e = a.edges();
    for (Edge x : b.edges()) e.push_back({x.u + a.vertex_count(), x.v + a.vertex_count()});
    return Graph::build(a.vertex_count() + b.vertex_count(), e);
}

inline Graph from_mask(int m, std::uint64_t mask) {
    std::vector<Edge> e;
    int bit = 0;
    for (int j = 1; j < m; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if ((mask >> bit) & 1U) e.push_back({i, j});
        }
    }
    return Graph::build(m, e);
}

/// Calls fn on all 2^C(m,2) labelled graphs on m vertices.
inline void for_each_labelled_graph(int m, const std::function<void(const Graph&)>& fn) {
    const std::uint64_t count = std::uint64_t{1} << (m * (m - 1) / 2);
    for (std::uint64_t mask = 0; mask < count; ++mask) fn(from_mask(m, mask));
}

/// Connectivity of G - removed by plain reachability from the first survivor.
inline bool residual_connected(const Graph& g, const std::vector<char>& removed) {
    std::vector<char> seen(removed);
    int start = -1;
    int alive = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!removed[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    }
    if (alive == 0) return false;
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < g.vertex_count(); ++y) {
            if (!seen[y] && g.adjacent(x, y)) {
                seen[y] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == alive;
}

/// Definition-level separator test: G - S disconnected or exactly one vertex.
inline bool separates_by_definition(const Graph& g, const std::vector<int>& s) {
    std::vector<char> removed(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v : s) removed[v] = 1;
    const int alive = g.vertex_count() - static_cast<int>(s.size());
    if (alive <= 0) return false;
    if (alive == 1) return true;
    return !residual_connected(g, removed);
}

/// Lexicographically first k-subset (as a sorted sequence) that separates g.
inline std::vector<int> lex_first_separator(const Graph& g, int k) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[i] = i;
    const int n = g.vertex_count();
    for (;;) {
        if (separates_by_definition(g, pick)) return pick;
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) return {};
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

/// Exhaustive search for a simple cycle of odd length.
inline bool has_odd_cycle_by_enumeration(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> on_path(static_cast<std::size_t>(n), 0);
    std::function<bool(int, int, int)> walk = [&](int start, int x, int length) {
        for (int y = 0; y < n; ++y) {
            if (!g.adjacent(x, y)) continue;
            if (y == start && length >= 3 && length % 2 == 1) return true;
            if (y <= start || on_path[y]) continue;  // cycles rooted at their smallest vertex
            on_path[y] = 1;
            const bool found = walk(start, y, length + 1);
            on_path[y] = 0;
            if (found) return true;
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        on_path[s] = 1;
        const bool found = walk(s, s, 1);
        on_path[s] = 0;
        if (found) return true;
    }
    return false;
}

}  // namespace kprod::test
