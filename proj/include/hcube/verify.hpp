#pragma once

#include "hcube/decomposition.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hcube {

/// Disjoint-set forest over dense vertex ids, with path halving and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t size);

    std::uint32_t find(std::uint32_t x);
    /// Returns false if x and y were already joined.
    bool unite(std::uint32_t x, std::uint32_t y);
    std::size_t sets() const noexcept { return sets_; }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
    std::size_t sets_;
};

/// True iff |s| = 2^n - 1, every vertex is incident to s, and s is connected.
bool is_spanning_tree(const EdgeSet& s);

bool is_matching(const EdgeSet& s);

struct ForestInfo {
    bool is_forest = false;
    /// Components among vertices incident to s; isolated cube vertices are not counted.
    std::uint64_t components = 0;

    friend bool operator==(const ForestInfo&, const ForestInfo&) = default;
};

ForestInfo forest_components(const EdgeSet& s);

struct TreeCheck {
    unsigned label = 0;
    std::uint64_t edges = 0;
    bool cardinality_ok = false;
    bool spans_all = false;
    bool connected = false;

    bool ok() const noexcept { return cardinality_ok && spans_all && connected; }
};

struct LeftoverCheck {
    std::uint64_t size = 0;
    std::uint64_t expected_size = 0;
    bool is_matching = false;
    bool is_forest = false;
    std::uint64_t components = 0;
    std::uint64_t expected_components = 0;
    bool ok = false;
};

struct VerifyReport {
    unsigned n = 0;
    unsigned k = 0;
    Kind kind = Kind::Even;
    bool partition_ok = false;
    std::vector<TreeCheck> trees;
    LeftoverCheck leftover;
    bool overall = false;
};

/// Checks every claimed property of `d` from first principles.
///
/// Even n = 2k: leftover must be a matching of size k.
/// Odd n = 2k+1: leftover must be a forest of 2^{2k}+k edges with k
/// components; n = 1 is the degenerate single-edge forest (one component).
///
/// Throws StructuralError if the label array is malformed (see check_shape);
/// a well-formed but wrong decomposition yields overall = false instead.
VerifyReport verify_decomposition(const Decomposition& d);

std::string render_text(const VerifyReport& r);

} // namespace hcube
