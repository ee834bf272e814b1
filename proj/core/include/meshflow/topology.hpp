#pragma once

#include "meshflow/graph.hpp"

#include <string>
#include <vector>

namespace meshflow {

struct Point2D {
    double x = 0.0;
    double y = 0.0;
};

/// A connectivity graph plus the node coordinates it was generated from.
/// Coordinates ride along in the file for reproducibility; the solver never
/// reads them (interference is derived from the graph).
struct Topology {
    ConnectivityGraph graph;
    std::vector<Point2D> coords;
};

/// Parses the JSON topology document. Throws ParseError on malformed input
/// and InvariantError when the link invariants are violated.
Topology parse_topology(const std::string& text);

/// Serializes to the JSON topology format. Deterministic byte-for-byte for a
/// given topology.
std::string serialize_topology(const Topology& topo);

}  // namespace meshflow
