#include "meshflow/topology.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>

namespace meshflow {

using nlohmann::json;

Topology parse_topology(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid topology JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("nodes") || !doc.contains("edges")) {
        throw ParseError("topology document must contain \"nodes\" and \"edges\"");
    }
    const json& nodes = doc["nodes"];
    const json& edges = doc["edges"];
    if (!nodes.is_array() || nodes.empty()) throw ParseError("\"nodes\" must be a non-empty array");
    if (!edges.is_array()) throw ParseError("\"edges\" must be an array");

    const int n = static_cast<int>(nodes.size());
    std::vector<Point2D> coords(n);
    std::vector<bool> seen(n, false);
    for (const json& node : nodes) {
        try {
            const int id = node.at("id").get<int>();
            if (id < 0 || id >= n) throw ParseError("node id out of range");
            if (seen[id]) throw ParseError("duplicate node id " + std::to_string(id));
            seen[id] = true;
            coords[id] = {node.at("x").get<double>(), node.at("y").get<double>()};
        } catch (const json::exception& e) {
            throw ParseError(std::string("malformed node entry: ") + e.what());
        }
    }

    std::vector<UndirectedEdge> edge_list;
    edge_list.reserve(edges.size());
    for (const json& edge : edges) {
        try {
            const int u = edge.at("u").get<int>();
            const int v = edge.at("v").get<int>();
            const std::int64_t cap = edge.at("cap_mbps").get<std::int64_t>();
            edge_list.push_back({u, v, Rational(cap)});
        } catch (const json::exception& e) {
            throw ParseError(std::string("malformed edge entry: ") + e.what());
        }
    }

    return Topology{ConnectivityGraph(n, edge_list), std::move(coords)};
}

std::string serialize_topology(const Topology& topo) {
    const ConnectivityGraph& g = topo.graph;
    json nodes = json::array();
    for (NodeId id = 0; id < g.node_count(); ++id) {
        const Point2D p = id < static_cast<NodeId>(topo.coords.size()) ? topo.coords[id] : Point2D{};
        nodes.push_back({{"id", id}, {"x", p.x}, {"y", p.y}});
    }
    json edges = json::array();
    for (const Link& link : g.links()) {
        if (link.from > link.to) continue;  // one entry per undirected pair
        if (denominator(link.capacity_mbps) != 1) {
            throw InvariantError("topology file format stores integer capacities only");
        }
        edges.push_back({{"u", link.from},
                         {"v", link.to},
                         {"cap_mbps", static_cast<std::int64_t>(numerator(link.capacity_mbps))}});
    }
    json doc{{"nodes", nodes}, {"edges", edges}};
    return doc.dump() + "\n";
}

}  // namespace meshflow
