#pragma once

#include "hcube/errors.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hcube {

using VertexId = std::uint32_t;
using EdgeId = std::uint64_t;

inline constexpr unsigned kDefaultMaxDimension = 24;
// VertexId is 32 bits wide and the graph must stay addressable.
inline constexpr unsigned kHardMaxDimension = 31;

/// Number of cube dimensions, checked against a configurable cap.
class Dimension {
public:
    explicit Dimension(unsigned n, unsigned cap = kDefaultMaxDimension);

    unsigned value() const noexcept { return n_; }
    /// floor(n/2), the number of spanning trees in a maximum packing.
    unsigned trees() const noexcept { return n_ / 2; }
    std::uint64_t vertex_count() const noexcept { return std::uint64_t{1} << n_; }
    std::uint64_t edge_count() const noexcept { return std::uint64_t{n_} << (n_ - 1); }

    friend bool operator==(Dimension, Dimension) = default;

private:
    unsigned n_;
};

/// Canonical edge: `u` is the endpoint with bit `d` clear.
struct Edge {
    VertexId u = 0;
    unsigned d = 0;

    VertexId v() const noexcept { return u | (VertexId{1} << d); }

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Drop bit `d` of `x` and shift the higher bits down by one.
constexpr std::uint64_t squeeze(std::uint64_t x, unsigned d) noexcept
{
    const std::uint64_t low = x & ((std::uint64_t{1} << d) - 1);
    return low | ((x >> (d + 1)) << d);
}

/// Inverse of squeeze: open a zero at bit `d`.
constexpr std::uint64_t unsqueeze(std::uint64_t x, unsigned d) noexcept
{
    const std::uint64_t low = x & ((std::uint64_t{1} << d) - 1);
    return low | ((x >> d) << (d + 1));
}

/// Dense dimension-major index: d * 2^(n-1) + squeeze(u, d).
EdgeId edge_id(const Edge& e, Dimension n);
Edge edge_from_id(EdgeId id, Dimension n);

/// Place `copy_bits` at bit positions at, at+1, ... above `v`.
constexpr VertexId embed(VertexId v, unsigned copy_bits, unsigned at) noexcept
{
    return v | (static_cast<VertexId>(copy_bits) << at);
}

inline bool adjacent(VertexId a, VertexId b) noexcept
{
    const VertexId x = a ^ b;
    return x != 0 && (x & (x - 1)) == 0;
}

/// Sorted set of edge ids of one cube.
class EdgeSet {
public:
    explicit EdgeSet(Dimension n) : n_(n) {}
    EdgeSet(Dimension n, std::vector<EdgeId> ids);

    Dimension dimension() const noexcept { return n_; }
    std::size_t size() const noexcept { return ids_.size(); }
    bool empty() const noexcept { return ids_.empty(); }
    bool contains(EdgeId id) const;
    bool contains(const Edge& e) const { return contains(edge_id(e, n_)); }

    auto begin() const noexcept { return ids_.begin(); }
    auto end() const noexcept { return ids_.end(); }
    const std::vector<EdgeId>& ids() const noexcept { return ids_; }

    Edge edge(std::size_t i) const { return edge_from_id(ids_[i], n_); }

private:
    Dimension n_;
    std::vector<EdgeId> ids_;
};

EdgeSet make_edge_set(Dimension n, const std::vector<Edge>& edges);

std::string to_bits(VertexId v, unsigned n);

} // namespace hcube
