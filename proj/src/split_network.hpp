#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kprod/graph.hpp"

namespace kprod::detail {

/// Unit-capacity vertex-split flow network for local vertex connectivity.
///
/// Vertex x becomes in(x) = 2x and out(x) = 2x + 1 joined by a capacity-1
/// arc; every edge xy becomes out(x)->in(y) and out(y)->in(x) with unbounded
/// capacity. The number of internally disjoint s-t paths is the max flow from
/// out(s) to in(t). Per-vertex capacities can be overridden so the same
/// network answers restricted queries: capacity 0 deletes a vertex, unbounded
/// capacity forbids it from the cut.
///
/// Not thread-safe; give each thread its own copy.
class SplitNetwork {
public:
    enum class Role : std::uint8_t { normal, deleted, uncuttable };

    explicit SplitNetwork(const Graph& g);

    /// min(κ(s, t), limit) for non-adjacent s != t under the given roles.
    /// `roles` is empty or has one entry per vertex.
    int local_connectivity(Vertex s, Vertex t, int limit, std::span<const Role> roles = {});

private:
    struct Arc {
        int to;
        int capacity;
    };

    bool augment(int source, int sink);

    int node_count_;
    int unbounded_;
    std::vector<Arc> arcs_;
    std::vector<int> residual_;
    std::vector<int> first_arc_;   // CSR offsets into arc_ids_
    std::vector<int> arc_ids_;
    std::vector<int> via_;         // BFS predecessor arc per node
    std::vector<int> queue_;
};

}  // namespace kprod::detail
