#pragma once

#include "meshflow/topology.hpp"

#include <cstdint>

namespace meshflow {

/// Parameters of the random-instance generator: nodes dropped uniformly in a
/// unit square, unit-disk connectivity with the radius tuned so the directed
/// link count lands within ±5% of the target, capacities uniform over
/// {cap_min, cap_min+step, ..., cap_max} Mbps per undirected pair.
struct TopologySpec {
    int node_count = 0;
    int target_directed_link_count = 0;
    int cap_min_mbps = 5;
    int cap_max_mbps = 15;
    int cap_step_mbps = 1;
    std::uint64_t seed = 0;
};

/// Deterministic for a fixed spec: same seed, same bytes, on every platform.
/// Retries with derived sub-seeds until the instance is connected and within
/// the link-count tolerance; throws GenerationError after 100 attempts.
Topology generate_random_topology(const TopologySpec& spec);

}  // namespace meshflow
