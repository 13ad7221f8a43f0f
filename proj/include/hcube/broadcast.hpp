#pragma once

#include "hcube/decomposition.hpp"

#include <span>
#include <vector>

namespace hcube {

/// Multi-tree broadcast figures for one root.
///
/// The time model is first order only: the message is cut into k*parts
/// equal chunks, each tree pipelines `parts` chunks down from the root,
/// every hop costs `hop_cost`, and there is no contention. The broadcast
/// ends when the slowest tree delivers its last chunk:
///
///     time = hop_cost * max_j (depth_j + parts - 1)
struct BroadcastMetrics {
    VertexId root = 0;
    std::vector<unsigned> depths;
    unsigned max_link_load = 0;
    double total_time = 0.0;
};

/// Eccentricity of `root` inside each spanning tree, in label order.
std::vector<unsigned> tree_depths(const Decomposition& d, VertexId root);

/// Largest number of trees claiming one edge. 1 for any decomposition with k >= 1.
unsigned link_load(const Decomposition& d);
/// Same, for an explicit family of edge sets that may overlap.
unsigned link_load(std::span<const EdgeSet> trees);

double broadcast_time(const Decomposition& d, VertexId root, unsigned parts, double hop_cost);

BroadcastMetrics broadcast_metrics(const Decomposition& d, VertexId root, unsigned parts,
                                   double hop_cost);

} // namespace hcube
