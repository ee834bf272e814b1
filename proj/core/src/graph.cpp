#include "meshflow/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace meshflow {

namespace {

std::string link_name(NodeId from, NodeId to) {
    std::ostringstream out;
    out << '(' << from << ',' << to << ')';
    return out.str();
}

}  // namespace

ConnectivityGraph::ConnectivityGraph(int node_count, const std::vector<UndirectedEdge>& edges)
    : node_count_(node_count) {
    if (node_count < 1) throw InvariantError("graph needs at least one node");

    std::map<std::pair<NodeId, NodeId>, Rational> caps;
    for (const auto& e : edges) {
        if (e.u < 0 || e.u >= node_count || e.v < 0 || e.v >= node_count) {
            throw InvariantError("edge endpoint out of range: " + link_name(e.u, e.v));
        }
        if (e.u == e.v) throw InvariantError("self-loop forbidden: " + link_name(e.u, e.v));
        if (e.capacity_mbps <= 0) {
            throw InvariantError("capacity must be positive on " + link_name(e.u, e.v));
        }
        const auto key = std::minmax(e.u, e.v);
        auto [it, inserted] = caps.emplace(key, e.capacity_mbps);
        if (!inserted) {
            if (it->second != e.capacity_mbps) {
                throw InvariantError("asymmetric capacity on pair " + link_name(key.first, key.second));
            }
            throw InvariantError("duplicate edge " + link_name(key.first, key.second));
        }
    }

    neighbors_.resize(node_count);
    adjacency_.assign(static_cast<std::size_t>(node_count) * node_count, 0);
    for (const auto& [pair, cap] : caps) {
        const auto [u, v] = pair;
        neighbors_[u].push_back({v, cap});
        neighbors_[v].push_back({u, cap});
        adjacency_[static_cast<std::size_t>(u) * node_count + v] = 1;
        adjacency_[static_cast<std::size_t>(v) * node_count + u] = 1;
    }
    for (auto& nb : neighbors_) {
        std::sort(nb.begin(), nb.end(), [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
    }
    links_.reserve(caps.size() * 2);
    for (NodeId u = 0; u < node_count; ++u) {
        for (const auto& nb : neighbors_[u]) {
            links_.push_back({u, nb.id, nb.capacity_mbps});
        }
    }
}

const std::vector<Neighbor>& ConnectivityGraph::neighbors(NodeId node) const {
    check_node(node);
    return neighbors_[node];
}

bool ConnectivityGraph::has_link(NodeId from, NodeId to) const {
    if (from < 0 || from >= node_count_ || to < 0 || to >= node_count_) return false;
    return adjacent(from, to);
}

const Rational& ConnectivityGraph::capacity(NodeId from, NodeId to) const {
    check_node(from);
    check_node(to);
    const auto& nb = neighbors_[from];
    auto it = std::lower_bound(nb.begin(), nb.end(), to,
                               [](const Neighbor& n, NodeId id) { return n.id < id; });
    if (it == nb.end() || it->id != to) {
        throw MissingLink("no link " + link_name(from, to));
    }
    return it->capacity_mbps;
}

Link ConnectivityGraph::link(NodeId from, NodeId to) const {
    return {from, to, capacity(from, to)};
}

void ConnectivityGraph::check_node(NodeId node) const {
    if (node < 0 || node >= node_count_) {
        std::ostringstream out;
        out << "node id " << node << " out of range [0," << node_count_ << ')';
        throw InvariantError(out.str());
    }
}

std::optional<int> min_hop_distance(const ConnectivityGraph& g, NodeId s, NodeId d) {
    g.check_node(s);
    g.check_node(d);
    if (s == d) return 0;
    std::vector<int> dist(g.node_count(), -1);
    std::deque<NodeId> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        for (const auto& nb : g.neighbors(u)) {
            if (dist[nb.id] >= 0) continue;
            dist[nb.id] = dist[u] + 1;
            if (nb.id == d) return dist[nb.id];
            queue.push_back(nb.id);
        }
    }
    return std::nullopt;
}

void RoutingView::delete_link(NodeId from, NodeId to) {
    if (!graph_->has_link(from, to)) {
        throw MissingLink("cannot delete nonexistent link (" + std::to_string(from) + "," +
                          std::to_string(to) + ")");
    }
    if (!deleted_.insert(key(from, to)).second) {
        throw MissingLink("link (" + std::to_string(from) + "," + std::to_string(to) +
                          ") already deleted from routing view");
    }
}

bool RoutingView::routable(NodeId from, NodeId to) const {
    return graph_->has_link(from, to) && !deleted_.contains(key(from, to));
}

}  // namespace meshflow
