#include "split_network.hpp"

#include <algorithm>

namespace kprod::detail {

namespace {
constexpr int in_node(Vertex x) { return 2 * x; }
constexpr int out_node(Vertex x) { return 2 * x + 1; }
}  // namespace

SplitNetwork::SplitNetwork(const Graph& g)
    : node_count_(2 * g.vertex_count()), unbounded_(g.vertex_count() + 1) {
    const int n = g.vertex_count();
    arcs_.reserve(2 * static_cast<std::size_t>(n) + 4 * g.edge_count());
    // Arc 2x is the split arc of vertex x; its reverse is 2x + 1.
    for (Vertex x = 0; x < n; ++x) {
        arcs_.push_back({out_node(x), 1});
        arcs_.push_back({in_node(x), 0});
    }
    for (const Edge& e : g.edges()) {
        arcs_.push_back({in_node(e.v), unbounded_});
        arcs_.push_back({out_node(e.u), 0});
        arcs_.push_back({in_node(e.u), unbounded_});
        arcs_.push_back({out_node(e.v), 0});
    }

    std::vector<int> tail(arcs_.size());
    for (std::size_t a = 0; a < arcs_.size(); ++a) tail[a] = arcs_[a ^ 1].to;
    first_arc_.assign(static_cast<std::size_t>(node_count_) + 1, 0);
    for (int t : tail) ++first_arc_[t + 1];
    for (int v = 0; v < node_count_; ++v) first_arc_[v + 1] += first_arc_[v];
    arc_ids_.resize(arcs_.size());
    std::vector<int> cursor(first_arc_.begin(), first_arc_.end() - 1);
    for (std::size_t a = 0; a < arcs_.size(); ++a) arc_ids_[cursor[tail[a]]++] = static_cast<int>(a);

    residual_.resize(arcs_.size());
    via_.resize(static_cast<std::size_t>(node_count_));
    queue_.reserve(static_cast<std::size_t>(node_count_));
}

int SplitNetwork::local_connectivity(Vertex s, Vertex t, int limit, std::span<const Role> roles) {
    for (std::size_t a = 0; a < arcs_.size(); ++a) residual_[a] = arcs_[a].capacity;
    if (!roles.empty()) {
        for (std::size_t x = 0; x < roles.size(); ++x) {
            if (roles[x] == Role::deleted) {
                residual_[2 * x] = 0;
            } else if (roles[x] == Role::uncuttable) {
                residual_[2 * x] = unbounded_;
            }
        }
    }

    const int source = out_node(s);
    const int sink = in_node(t);
    int flow = 0;
    while (flow < limit && augment(source, sink)) ++flow;
    return flow;
}

bool SplitNetwork::augment(int source, int sink) {
    std::fill(via_.begin(), via_.end(), -1);
    queue_.clear();
    queue_.push_back(source);
    via_[source] = -2;
    for (std::size_t head = 0; head < queue_.size(); ++head) {
        const int x = queue_[head];
        for (int k = first_arc_[x]; k < first_arc_[x + 1]; ++k) {
            const int a = arc_ids_[k];
            const int y = arcs_[a].to;
            if (residual_[a] <= 0 || via_[y] != -1) continue;
            via_[y] = a;
            if (y == sink) {
                // Unit augmentation; the caller's limit bounds the loop.
                for (int v = sink; v != source; v = arcs_[via_[v] ^ 1].to) {
                    residual_[via_[v]] -= 1;
                    residual_[via_[v] ^ 1] += 1;
                }
                return true;
            }
            queue_.push_back(y);
        }
    }
    return false;
}

}  // namespace kprod::detail
