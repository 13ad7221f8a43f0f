#include "hcube/hypercube.hpp"

#include <algorithm>

namespace hcube {

Dimension::Dimension(unsigned n, unsigned cap) : n_(n)
{
    if (cap > kHardMaxDimension) {
        throw CapError("dimension cap " + std::to_string(cap) + " exceeds hard limit " +
                       std::to_string(kHardMaxDimension));
    }
    if (n == 0) {
        throw CapError("dimension must be at least 1");
    }
    if (n > cap) {
        throw CapError("dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
}

EdgeId edge_id(const Edge& e, Dimension n)
{
    const unsigned dim = n.value();
    if (e.d >= dim) {
        throw MalformedEdgeError("edge direction " + std::to_string(e.d) + " out of range for n=" +
                                 std::to_string(dim));
    }
    if (e.u >> dim) {
        throw MalformedEdgeError("vertex " + std::to_string(e.u) + " out of range for n=" +
                                 std::to_string(dim));
    }
    if ((e.u >> e.d) & 1u) {
        throw MalformedEdgeError("edge endpoint has bit " + std::to_string(e.d) + " set");
    }
    return (EdgeId{e.d} << (dim - 1)) + squeeze(e.u, e.d);
}

Edge edge_from_id(EdgeId id, Dimension n)
{
    if (id >= n.edge_count()) {
        throw MalformedEdgeError("edge id " + std::to_string(id) + " out of range");
    }
    const unsigned shift = n.value() - 1;
    const auto d = static_cast<unsigned>(id >> shift);
    const EdgeId rest = id & ((EdgeId{1} << shift) - 1);
    return Edge{static_cast<VertexId>(unsqueeze(rest, d)), d};
}

EdgeSet::EdgeSet(Dimension n, std::vector<EdgeId> ids) : n_(n), ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    if (!ids_.empty() && ids_.back() >= n_.edge_count()) {
        throw MalformedEdgeError("edge id " + std::to_string(ids_.back()) + " out of range");
    }
}

bool EdgeSet::contains(EdgeId id) const
{
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

EdgeSet make_edge_set(Dimension n, const std::vector<Edge>& edges)
{
    std::vector<EdgeId> ids;
    ids.reserve(edges.size());
    for (const auto& e : edges) {
        ids.push_back(edge_id(e, n));
    }
    return EdgeSet(n, std::move(ids));
}

std::string to_bits(VertexId v, unsigned n)
{
    std::string s(n, '0');
    for (unsigned i = 0; i < n; ++i) {
        if ((v >> i) & 1u) {
            s[n - 1 - i] = '1';
        }
    }
    return s;
}

} // namespace hcube
