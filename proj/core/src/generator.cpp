#include "meshflow/generator.hpp"

#include "meshflow/rng.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <tuple>
#include <vector>

namespace meshflow {

namespace {

struct PairDistance {
    double dist_sq;
    NodeId u;
    NodeId v;
};

bool connected(int node_count, const std::vector<std::pair<NodeId, NodeId>>& edges) {
    std::vector<std::vector<NodeId>> adj(node_count);
    for (const auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> seen(node_count, false);
    std::deque<NodeId> queue{0};
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        const NodeId u = queue.front();
        queue.pop_front();
        for (NodeId v : adj[u]) {
            if (seen[v]) continue;
            seen[v] = true;
            ++reached;
            queue.push_back(v);
        }
    }
    return reached == node_count;
}

void check_spec(const TopologySpec& spec) {
    std::ostringstream bad;
    if (spec.node_count < 2) bad << "node_count must be >= 2";
    else if (spec.cap_min_mbps <= 0) bad << "cap_min must be positive";
    else if (spec.cap_min_mbps > spec.cap_max_mbps) bad << "cap_min must not exceed cap_max";
    else if (spec.cap_step_mbps <= 0) bad << "cap_step must be positive";
    else if ((spec.cap_max_mbps - spec.cap_min_mbps) % spec.cap_step_mbps != 0)
        bad << "cap_step must divide cap_max - cap_min";
    else if (spec.target_directed_link_count < 2) bad << "target link count must be >= 2";
    if (!bad.str().empty()) throw GenerationError("invalid topology spec: " + bad.str());
}

}  // namespace

Topology generate_random_topology(const TopologySpec& spec) {
    check_spec(spec);
    constexpr int kMaxAttempts = 100;
    const int n = spec.node_count;
    const long long target = spec.target_directed_link_count;
    // undirected pair counts whose doubled value stays within ±5% of target
    const long long pair_count = static_cast<long long>(n) * (n - 1) / 2;
    const long long k_lo = (19 * target + 39) / 40;
    const long long k_hi = std::min(21 * target / 40, pair_count);
    const long long k_mid = std::clamp((target + 1) / 2, k_lo, std::max(k_lo, k_hi));
    if (k_lo > k_hi) {
        throw GenerationError("link-count target unreachable for this node count");
    }

    const int levels = (spec.cap_max_mbps - spec.cap_min_mbps) / spec.cap_step_mbps + 1;

    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Xoshiro256StarStar rng(derive_seed(spec.seed, static_cast<std::uint64_t>(attempt)));

        std::vector<Point2D> coords(n);
        for (auto& p : coords) {
            p.x = rng.next_unit();
            p.y = rng.next_unit();
        }

        std::vector<PairDistance> pairs;
        pairs.reserve(pair_count);
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId v = u + 1; v < n; ++v) {
                const double dx = coords[u].x - coords[v].x;
                const double dy = coords[u].y - coords[v].y;
                pairs.push_back({dx * dx + dy * dy, u, v});
            }
        }
        std::sort(pairs.begin(), pairs.end(), [](const PairDistance& a, const PairDistance& b) {
            return std::tie(a.dist_sq, a.u, a.v) < std::tie(b.dist_sq, b.u, b.v);
        });

        // Sweep the disk radius through the tolerance window, preferring the
        // count closest to the target, until the instance is connected.
        std::vector<long long> k_order;
        for (long long k = k_mid; k <= k_hi; ++k) k_order.push_back(k);
        for (long long k = k_mid - 1; k >= k_lo; --k) k_order.push_back(k);

        for (long long k : k_order) {
            std::vector<std::pair<NodeId, NodeId>> chosen;
            chosen.reserve(k);
            for (long long i = 0; i < k; ++i) chosen.emplace_back(pairs[i].u, pairs[i].v);
            if (!connected(n, chosen)) continue;

            std::sort(chosen.begin(), chosen.end());
            std::vector<UndirectedEdge> edges;
            edges.reserve(chosen.size());
            for (const auto& [u, v] : chosen) {
                const int cap = spec.cap_min_mbps +
                                spec.cap_step_mbps * static_cast<int>(rng.next_below(levels));
                edges.push_back({u, v, Rational(cap)});
            }
            return Topology{ConnectivityGraph(n, edges), std::move(coords)};
        }
    }
    std::ostringstream out;
    out << "no connected instance within the link tolerance after " << kMaxAttempts
        << " attempts (seed " << spec.seed << ")";
    throw GenerationError(out.str());
}

}  // namespace meshflow
