#include "hcube/broadcast.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace hcube {
namespace {

void require_root(const Decomposition& d, VertexId root)
{
    if (root >= d.dimension().vertex_count()) {
        throw std::out_of_range("root " + std::to_string(root) + " out of range for n=" +
                                std::to_string(d.n));
    }
}

unsigned time_steps(const std::vector<unsigned>& depths, unsigned parts)
{
    return *std::max_element(depths.begin(), depths.end()) + parts - 1;
}

} // namespace

std::vector<unsigned> tree_depths(const Decomposition& d, VertexId root)
{
    check_shape(d);
    require_root(d, root);
    const Dimension n = d.dimension();
    const std::uint64_t half = std::uint64_t{1} << (d.n - 1);
    constexpr unsigned kUnseen = std::numeric_limits<unsigned>::max();

    std::vector<unsigned> depths;
    std::vector<unsigned> dist(n.vertex_count());
    std::vector<VertexId> queue(n.vertex_count());
    for (unsigned j = 1; j <= d.k; ++j) {
        std::fill(dist.begin(), dist.end(), kUnseen);
        std::size_t head = 0;
        std::size_t tail = 0;
        dist[root] = 0;
        queue[tail++] = root;
        unsigned deepest = 0;
        while (head < tail) {
            const VertexId x = queue[head++];
            for (unsigned dir = 0; dir < d.n; ++dir) {
                const VertexId y = x ^ (VertexId{1} << dir);
                const VertexId low = std::min(x, y);
                const EdgeId id = dir * half + squeeze(low, dir);
                if (d.labels[id] != j || dist[y] != kUnseen) {
                    continue;
                }
                dist[y] = dist[x] + 1;
                deepest = std::max(deepest, dist[y]);
                queue[tail++] = y;
            }
        }
        if (tail != n.vertex_count()) {
            throw std::invalid_argument("tree " + std::to_string(j) + " does not span the cube");
        }
        depths.push_back(deepest);
    }
    return depths;
}

unsigned link_load(std::span<const EdgeSet> trees)
{
    if (trees.empty()) {
        return 0;
    }
    std::vector<unsigned> claims(trees.front().dimension().edge_count(), 0);
    for (const auto& t : trees) {
        for (EdgeId id : t) {
            ++claims[id];
        }
    }
    return *std::max_element(claims.begin(), claims.end());
}

unsigned link_load(const Decomposition& d)
{
    check_shape(d);
    std::vector<EdgeSet> trees;
    for (unsigned j = 1; j <= d.k; ++j) {
        trees.push_back(d.edges_with(static_cast<TreeLabel>(j)));
    }
    return link_load(trees);
}

double broadcast_time(const Decomposition& d, VertexId root, unsigned parts, double hop_cost)
{
    return broadcast_metrics(d, root, parts, hop_cost).total_time;
}

BroadcastMetrics broadcast_metrics(const Decomposition& d, VertexId root, unsigned parts,
                                   double hop_cost)
{
    if (d.k == 0) {
        throw std::invalid_argument("broadcast model needs at least one spanning tree (n >= 2)");
    }
    if (parts == 0) {
        throw std::invalid_argument("parts must be at least 1");
    }
    if (!(hop_cost >= 0.0)) {
        throw std::invalid_argument("hop cost must be non-negative");
    }
    BroadcastMetrics m;
    m.root = root;
    m.depths = tree_depths(d, root);
    m.max_link_load = link_load(d);
    m.total_time = hop_cost * time_steps(m.depths, parts);
    return m;
}

} // namespace hcube
