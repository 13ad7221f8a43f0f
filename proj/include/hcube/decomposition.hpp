#pragma once

#include "hcube/hypercube.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace hcube {

/// 0 marks the leftover set, j >= 1 marks spanning tree j.
using TreeLabel = std::uint8_t;

inline constexpr TreeLabel kLeftover = 0;

enum class Kind : std::uint8_t { Even = 0, Odd = 1 };

std::string_view to_string(Kind kind) noexcept;

inline Kind kind_for(unsigned n) noexcept { return n % 2 == 0 ? Kind::Even : Kind::Odd; }

/// Labeling of every edge of Q_n, indexed by EdgeId.
///
/// A plain value: nothing here guarantees the labeling is a valid
/// decomposition. `check_shape` only validates sizes and label ranges;
/// structural properties are the verifier's job.
struct Decomposition {
    unsigned n = 0;
    unsigned k = 0;
    Kind kind = Kind::Even;
    std::vector<TreeLabel> labels;

    Dimension dimension(unsigned cap = kHardMaxDimension) const { return Dimension(n, cap); }

    /// Ids of all edges carrying `label`, in EdgeId order.
    EdgeSet edges_with(TreeLabel label) const;
    std::uint64_t count(TreeLabel label) const;

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Throws StructuralError on a wrong array length, a label above k,
/// a tree count other than floor(n/2), or a kind that disagrees with n.
void check_shape(const Decomposition& d);

} // namespace hcube
