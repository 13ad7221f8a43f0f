#include "hcube/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hcube::oracle {
namespace {

void require_cap(const SmallGraph& g, unsigned cap, const char* what)
{
    if (g.vertex_count() > cap) {
        throw CapError(std::string(what) + ": graph has " + std::to_string(g.vertex_count()) +
                       " vertices, cap is " + std::to_string(cap));
    }
}

SmallEdge normalized(SmallEdge e)
{
    return e.first < e.second ? e : SmallEdge{e.second, e.first};
}

} // namespace

SmallGraph::SmallGraph(unsigned vertices, std::vector<SmallEdge> edges)
    : vertices_(vertices), edges_(std::move(edges)), adjacency_(vertices, 0)
{
    if (vertices == 0) {
        throw std::invalid_argument("graph needs at least one vertex");
    }
    if (vertices > kMaxSubsetVertices) {
        throw CapError("graph has " + std::to_string(vertices) + " vertices, cap is " +
                       std::to_string(kMaxSubsetVertices));
    }
    for (auto& e : edges_) {
        e = normalized(e);
        if (e.second >= vertices) {
            throw std::invalid_argument("edge endpoint " + std::to_string(e.second) + " out of range");
        }
        if (e.first == e.second) {
            throw std::invalid_argument("loop at vertex " + std::to_string(e.first));
        }
        const std::uint32_t bit = std::uint32_t{1} << e.second;
        if (adjacency_[e.first] & bit) {
            throw std::invalid_argument("repeated edge " + std::to_string(e.first) + " " +
                                        std::to_string(e.second));
        }
        adjacency_[e.first] |= bit;
        adjacency_[e.second] |= std::uint32_t{1} << e.first;
    }
}

SmallGraph SmallGraph::hypercube(unsigned n)
{
    if (n == 0 || n > 4) {
        throw CapError("hypercube oracle graph supports 1 <= n <= 4");
    }
    std::vector<SmallEdge> edges;
    for (unsigned u = 0; u < (1u << n); ++u) {
        for (unsigned d = 0; d < n; ++d) {
            if (!((u >> d) & 1u)) {
                edges.emplace_back(u, u | (1u << d));
            }
        }
    }
    return SmallGraph(1u << n, std::move(edges));
}

SmallGraph SmallGraph::complete(unsigned vertices)
{
    std::vector<SmallEdge> edges;
    for (unsigned u = 0; u < vertices; ++u) {
        for (unsigned v = u + 1; v < vertices; ++v) {
            edges.emplace_back(u, v);
        }
    }
    return SmallGraph(vertices, std::move(edges));
}

SmallGraph SmallGraph::petersen()
{
    std::vector<SmallEdge> edges;
    for (unsigned i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return SmallGraph(10, std::move(edges));
}

SmallGraph SmallGraph::without(std::span<const SmallEdge> removed) const
{
    std::vector<SmallEdge> kept = edges_;
    for (const auto& r : removed) {
        const auto it = std::find(kept.begin(), kept.end(), normalized(r));
        if (it == kept.end()) {
            throw std::invalid_argument("edge " + std::to_string(r.first) + " " +
                                        std::to_string(r.second) + " is not in the graph");
        }
        kept.erase(it);
    }
    return SmallGraph(vertices_, std::move(kept));
}

SmallGraph parse_edge_list(std::istream& in)
{
    std::vector<SmallEdge> edges;
    unsigned vertices = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        long long u = 0;
        long long v = 0;
        if (!(fields >> u)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            throw ParseError("line " + std::to_string(line_no) + ": expected \"u v\"");
        }
        std::string extra;
        if (!(fields >> v) || (fields >> extra)) {
            throw ParseError("line " + std::to_string(line_no) + ": expected \"u v\"");
        }
        if (u < 0 || v < 0 || u >= (1ll << 20) || v >= (1ll << 20)) {
            throw ParseError("line " + std::to_string(line_no) + ": vertex id out of range");
        }
        edges.emplace_back(static_cast<unsigned>(u), static_cast<unsigned>(v));
        vertices = std::max({vertices, static_cast<unsigned>(u) + 1, static_cast<unsigned>(v) + 1});
    }
    if (edges.empty()) {
        throw ParseError("edge list is empty");
    }
    try {
        return SmallGraph(vertices, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

void for_each_set_partition(unsigned n,
                            const std::function<void(unsigned, std::span<const std::uint8_t>)>& visit)
{
    if (n == 0) {
        return;
    }
    // rgs[i] <= 1 + max(rgs[0..i-1]); prefix_max[i] caches that maximum.
    std::vector<std::uint8_t> rgs(n, 0);
    std::vector<std::uint8_t> prefix_max(n, 0);
    while (true) {
        visit(static_cast<unsigned>(std::max(prefix_max[n - 1], rgs[n - 1])) + 1, rgs);
        unsigned i = n - 1;
        while (i > 0 && rgs[i] > prefix_max[i]) {
            --i;
        }
        if (i == 0) {
            return;
        }
        ++rgs[i];
        for (unsigned j = i + 1; j < n; ++j) {
            rgs[j] = 0;
            prefix_max[j] = std::max(prefix_max[j - 1], rgs[j - 1]);
        }
    }
}

unsigned nw_arboricity(const SmallGraph& g)
{
    require_cap(g, kMaxSubsetVertices, "nw_arboricity");
    if (g.edge_count() == 0) {
        throw std::invalid_argument("nw_arboricity: graph has no edges");
    }
    const unsigned V = g.vertex_count();
    unsigned best = 0;
    for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << V); ++subset) {
        const auto size = static_cast<unsigned>(std::popcount(subset));
        if (size < 2) {
            continue;
        }
        unsigned twice_edges = 0;
        for (std::uint32_t rest = subset; rest != 0; rest &= rest - 1) {
            const auto v = static_cast<unsigned>(std::countr_zero(rest));
            twice_edges += static_cast<unsigned>(std::popcount(g.neighbours(v) & subset));
        }
        const unsigned edges = twice_edges / 2;
        best = std::max(best, (edges + size - 2) / (size - 1));
    }
    return best;
}

unsigned packing_upper_bound(const SmallGraph& g)
{
    require_cap(g, kMaxPartitionVertices, "packing_upper_bound");
    if (g.vertex_count() < 2) {
        throw std::invalid_argument("packing_upper_bound: need at least two vertices");
    }
    unsigned best = std::numeric_limits<unsigned>::max();
    for_each_set_partition(g.vertex_count(), [&](unsigned blocks, std::span<const std::uint8_t> rgs) {
        if (blocks < 2) {
            return;
        }
        unsigned cross = 0;
        for (const auto& [u, v] : g.edges()) {
            cross += rgs[u] != rgs[v] ? 1u : 0u;
        }
        best = std::min(best, cross / (blocks - 1));
    });
    return best;
}

unsigned edge_connectivity(const SmallGraph& g)
{
    const unsigned V = g.vertex_count();
    if (V < 2) {
        return 0;
    }
    unsigned best = std::numeric_limits<unsigned>::max();
    // Fix vertex 0 on one side; S ranges over subsets containing it.
    const std::uint32_t all = (std::uint32_t{1} << V) - 1;
    for (std::uint32_t rest = 0; rest < (std::uint32_t{1} << (V - 1)); ++rest) {
        const std::uint32_t side = (rest << 1) | 1u;
        if (side == all) {
            continue;
        }
        unsigned cut = 0;
        for (const auto& [u, v] : g.edges()) {
            cut += (((side >> u) ^ (side >> v)) & 1u);
        }
        best = std::min(best, cut);
    }
    return best;
}

bool catlin_spot_check(const SmallGraph& g, std::span<const SmallEdge> removed)
{
    require_cap(g, kMaxCatlinVertices, "catlin_spot_check");
    const auto k = static_cast<unsigned>(removed.size());
    if (edge_connectivity(g) < 2 * k) {
        throw std::invalid_argument("catlin_spot_check: graph is not " + std::to_string(2 * k) +
                                    "-edge-connected");
    }
    return packing_upper_bound(g.without(removed)) >= k;
}

} // namespace hcube::oracle
