#pragma once

#include "hcube/decomposition.hpp"

#include <cstdint>
#include <vector>

namespace hcube {

/// Even decomposition together with the ordering of its leftover matching.
///
/// `independents[j-1]` is the leftover edge paired with tree j when the
/// cube is replicated; the doubling steps rely on that pairing.
struct CopyDecomposition {
    Decomposition decomposition;
    std::vector<EdgeId> independents;
};

/// Tree sizes observed after one four-copy doubling step.
struct EvenLevelSizes {
    unsigned copy_trees = 0;                ///< trees per copy (m); the result has m+1
    std::vector<std::uint64_t> tree_sizes;  ///< index j-1 holds |T_j| of the result
};

/// Closed-form tree sizes for a doubling step from Q_{2m} to Q_{2m+2}.
struct DoublingSizeFormulas {
    std::uint64_t linked;   ///< trees 1..m-1: 4(2^{2m}-1)+3
    std::uint64_t bridge;   ///< tree m: (2^{2m}-1)+3(2^{2m}-m)+3m
    std::uint64_t closing;  ///< tree m+1: 3(2^{2m}-1)+2^{2m}+2
};

DoublingSizeFormulas doubling_size_formulas(unsigned m);

/// Q_2: tree {00-01, 01-11, 10-11}, leftover {00-10}.
Decomposition base_q2();
CopyDecomposition base_q2_copy();

/// One step Q_{2m} -> Q_{2m+2}. Copies sit at the two new high bits in
/// Gray order 00, 01, 11, 10, so consecutive copies (and the last with
/// the first) are joined by a cross matching.
CopyDecomposition double_even(const CopyDecomposition& copy);

/// One step Q_{2k} -> Q_{2k+1}: k trees plus a k-component leftover forest.
Decomposition extend_odd(const CopyDecomposition& copy);

/// Q_{2k}: k spanning trees and a leftover matching of size k.
/// If `trace` is given, one entry per doubling step is appended.
CopyDecomposition construct_even_copy(unsigned k, unsigned cap = kDefaultMaxDimension,
                                      std::vector<EvenLevelSizes>* trace = nullptr);
Decomposition construct_even(unsigned k, unsigned cap = kDefaultMaxDimension,
                             std::vector<EvenLevelSizes>* trace = nullptr);

/// Q_{2k+1}: k spanning trees and a leftover forest with k components.
Decomposition construct_odd(unsigned k, unsigned cap = kDefaultMaxDimension);

/// Dispatch on parity. n = 1 yields zero trees and the single edge as leftover.
Decomposition construct(unsigned n, unsigned cap = kDefaultMaxDimension);

} // namespace hcube
