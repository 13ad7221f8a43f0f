#pragma once

#include "hcube/errors.hpp"

#include <cstdint>
#include <functional>
#include <istream>
#include <span>
#include <utility>
#include <vector>

namespace hcube::oracle {

inline constexpr unsigned kMaxSubsetVertices = 16;
inline constexpr unsigned kMaxPartitionVertices = 10;
inline constexpr unsigned kMaxCatlinVertices = 8;

using SmallEdge = std::pair<unsigned, unsigned>;

/// Simple undirected graph on at most 16 vertices.
class SmallGraph {
public:
    /// Throws std::invalid_argument on loops, repeated edges, ids >= vertices,
    /// zero vertices, or more than kMaxSubsetVertices vertices.
    SmallGraph(unsigned vertices, std::vector<SmallEdge> edges);

    static SmallGraph hypercube(unsigned n);
    static SmallGraph complete(unsigned vertices);
    static SmallGraph petersen();

    unsigned vertex_count() const noexcept { return vertices_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<SmallEdge>& edges() const noexcept { return edges_; }
    /// Neighbour bitmask of v.
    std::uint32_t neighbours(unsigned v) const { return adjacency_[v]; }

    SmallGraph without(std::span<const SmallEdge> removed) const;

private:
    unsigned vertices_;
    std::vector<SmallEdge> edges_;
    std::vector<std::uint32_t> adjacency_;
};

/// Reads "u v" pairs, one per line, 0-based; '#' starts a comment.
/// The vertex count is one more than the largest id seen.
SmallGraph parse_edge_list(std::istream& in);

/// Calls `visit(blocks, rgs)` for every set partition of {0..n-1}, where
/// rgs[i] is the block of element i as a restricted growth string.
void for_each_set_partition(unsigned n,
                            const std::function<void(unsigned, std::span<const std::uint8_t>)>& visit);

/// max over vertex subsets S, |S| >= 2, of ceil(|E(G[S])| / (|S|-1)).
unsigned nw_arboricity(const SmallGraph& g);

/// min over vertex partitions P, |P| >= 2, of floor(cross(P) / (|P|-1)).
unsigned packing_upper_bound(const SmallGraph& g);

/// Minimum edge cut over all vertex bipartitions.
unsigned edge_connectivity(const SmallGraph& g);

/// Whether g minus `removed` still packs |removed| spanning trees.
/// Requires g to be 2|removed|-edge-connected.
bool catlin_spot_check(const SmallGraph& g, std::span<const SmallEdge> removed);

} // namespace hcube::oracle
