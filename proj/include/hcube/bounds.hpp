#pragma once

#include <cstdint>
#include <string>

namespace hcube {

/// Closed-form decomposition invariants of Q_n. All arithmetic is exact.
struct BoundsReport {
    unsigned n = 0;
    std::uint64_t edges = 0;          ///< n * 2^(n-1)
    std::uint64_t vertices = 0;       ///< 2^n
    std::uint64_t sigma = 0;          ///< spanning tree packing number, floor(n/2)
    std::uint64_t arboricity = 0;     ///< floor(n/2) + 1
    std::uint64_t tau = 0;            ///< tree number, ceil((n+1)/2)
    std::uint64_t leftover = 0;       ///< edges outside a maximum packing
    std::uint64_t trivial_upper = 0;  ///< floor(|E| / (|V|-1)), bounds sigma from above
    std::uint64_t trivial_lower = 0;  ///< ceil(|E| / (|V|-1)), bounds arboricity from below

    /// sigma <= upper <= lower <= arboricity <= tau
    bool chain_holds() const noexcept;
};

BoundsReport bounds_for(unsigned n);

/// True iff `sigma_witness` edge-disjoint spanning trees fit under the
/// counting bound floor(edges / (vertices-1)). Requires vertices >= 2.
bool inequality_chain(std::uint64_t edges, std::uint64_t vertices, std::uint64_t sigma_witness);

std::string render_text(const BoundsReport& b);

} // namespace hcube
