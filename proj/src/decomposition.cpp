#include "hcube/decomposition.hpp"

#include <algorithm>
#include <string>

namespace hcube {

std::string_view to_string(Kind kind) noexcept
{
    return kind == Kind::Even ? "even" : "odd";
}

EdgeSet Decomposition::edges_with(TreeLabel label) const
{
    std::vector<EdgeId> ids;
    for (EdgeId id = 0; id < labels.size(); ++id) {
        if (labels[id] == label) {
            ids.push_back(id);
        }
    }
    return EdgeSet(dimension(), std::move(ids));
}

std::uint64_t Decomposition::count(TreeLabel label) const
{
    return static_cast<std::uint64_t>(std::count(labels.begin(), labels.end(), label));
}

void check_shape(const Decomposition& d)
{
    if (d.n == 0 || d.n > kHardMaxDimension) {
        throw StructuralError("dimension " + std::to_string(d.n) + " out of range");
    }
    const Dimension dim(d.n, kHardMaxDimension);
    if (d.k != dim.trees()) {
        throw StructuralError("tree count " + std::to_string(d.k) + " does not match floor(n/2)=" +
                              std::to_string(dim.trees()));
    }
    if (d.kind != kind_for(d.n)) {
        throw StructuralError("kind does not match the parity of n");
    }
    if (d.labels.size() != dim.edge_count()) {
        throw StructuralError("label array has " + std::to_string(d.labels.size()) +
                              " entries, expected " + std::to_string(dim.edge_count()));
    }
    const auto it = std::find_if(d.labels.begin(), d.labels.end(),
                                 [k = d.k](TreeLabel l) { return l > k; });
    if (it != d.labels.end()) {
        throw StructuralError("edge " + std::to_string(it - d.labels.begin()) + " has label " +
                              std::to_string(*it) + " > k=" + std::to_string(d.k));
    }
}

} // namespace hcube
