#pragma once

#include "meshflow/errors.hpp"
#include "meshflow/rational.hpp"

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

namespace meshflow {

/// 0-based node index.
using NodeId = int;

/// Directed transmission link with its capacity in Mbps.
struct Link {
    NodeId from = -1;
    NodeId to = -1;
    Rational capacity_mbps;

    friend bool operator==(const Link& a, const Link& b) {
        return a.from == b.from && a.to == b.to;
    }
};

struct UndirectedEdge {
    NodeId u = -1;
    NodeId v = -1;
    Rational capacity_mbps;
};

struct Neighbor {
    NodeId id;
    Rational capacity_mbps;
};

/// Immutable connectivity graph. Links are directed but always come in
/// symmetric pairs with equal capacity; the neighbor sets double as
/// interference neighborhoods (transmission range equals interference range).
class ConnectivityGraph {
public:
    /// Builds from undirected edges; each edge yields both directed links.
    /// Throws InvariantError on self-loops, duplicates, mismatched capacities
    /// for a repeated pair, non-positive capacities, or out-of-range ids.
    ConnectivityGraph(int node_count, const std::vector<UndirectedEdge>& edges);

    int node_count() const { return node_count_; }
    int directed_link_count() const { return static_cast<int>(links_.size()); }

    /// All directed links, ordered by (from, to).
    const std::vector<Link>& links() const { return links_; }

    /// Neighbors of `node`, ascending id.
    const std::vector<Neighbor>& neighbors(NodeId node) const;

    bool has_link(NodeId from, NodeId to) const;
    /// Capacity of directed link (from,to); throws MissingLink if absent.
    const Rational& capacity(NodeId from, NodeId to) const;
    Link link(NodeId from, NodeId to) const;

    /// O(1) adjacency test (also the interference test: adjacent nodes hear
    /// each other's transmissions).
    bool adjacent(NodeId a, NodeId b) const {
        return a != b && (adjacency_[static_cast<std::size_t>(a) * node_count_ + b] != 0);
    }

    void check_node(NodeId node) const;

private:
    int node_count_ = 0;
    std::vector<Link> links_;
    std::vector<std::vector<Neighbor>> neighbors_;
    std::vector<std::uint8_t> adjacency_;  // node_count x node_count
};

/// Minimum hop count from s to d; std::nullopt when unreachable.
std::optional<int> min_hop_distance(const ConnectivityGraph& g, NodeId s, NodeId d);

/// Mutable per-search overlay: directed links removed for routing purposes
/// only. The underlying physical graph, and with it every interference
/// neighborhood, is untouched.
class RoutingView {
public:
    explicit RoutingView(const ConnectivityGraph& g) : graph_(&g) {}

    /// Removes directed link (from,to) from routing. Throws MissingLink if the
    /// link does not exist or is already deleted.
    void delete_link(NodeId from, NodeId to);

    bool routable(NodeId from, NodeId to) const;
    std::size_t deleted_count() const { return deleted_.size(); }
    bool is_deleted(NodeId from, NodeId to) const { return deleted_.contains(key(from, to)); }

    const ConnectivityGraph& graph() const { return *graph_; }

private:
    static std::uint64_t key(NodeId from, NodeId to) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(from)) << 32) |
               static_cast<std::uint32_t>(to);
    }

    const ConnectivityGraph* graph_;
    std::unordered_set<std::uint64_t> deleted_;
};

}  // namespace meshflow
