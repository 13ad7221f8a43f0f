#include "hcube/construct.hpp"

#include <array>
#include <string>

namespace hcube {
namespace {

// Copy i (0-based) lives at high-bit pattern kGray[i]: 00, 01, 11, 10.
constexpr std::array<unsigned, 4> kGray = {0b00, 0b01, 0b11, 0b10};

using LabelMap = std::vector<TreeLabel>;

// Copy the label block of every in-copy direction into its place in the
// larger cube. For direction d < c the new id is
// d*2^(n-1) + bits*2^(c-1) + squeeze(u, d) since the copy bits sit above c.
void replicate(const std::vector<TreeLabel>& from, unsigned c, unsigned n, unsigned bits,
               const LabelMap& map, std::vector<TreeLabel>& to)
{
    const std::uint64_t half_c = std::uint64_t{1} << (c - 1);
    const std::uint64_t half_n = std::uint64_t{1} << (n - 1);
    for (unsigned d = 0; d < c; ++d) {
        const TreeLabel* src = from.data() + d * half_c;
        TreeLabel* dst = to.data() + d * half_n + bits * half_c;
        for (std::uint64_t s = 0; s < half_c; ++s) {
            dst[s] = map[src[s]];
        }
    }
}

std::vector<std::uint64_t> label_counts(const Decomposition& d)
{
    std::vector<std::uint64_t> counts(d.k + 1, 0);
    for (TreeLabel l : d.labels) {
        ++counts[l];
    }
    return counts;
}

// Smaller endpoint of an in-copy edge, in copy-local coordinates.
VertexId low_endpoint(EdgeId id, unsigned c)
{
    return edge_from_id(id, Dimension(c, kHardMaxDimension)).u;
}

} // namespace

DoublingSizeFormulas doubling_size_formulas(unsigned m)
{
    const std::uint64_t q = std::uint64_t{1} << (2 * m);
    return DoublingSizeFormulas{
        4 * (q - 1) + 3,
        (q - 1) + 3 * (q - m) + 3 * m,
        3 * (q - 1) + q + 2,
    };
}

Decomposition base_q2()
{
    return base_q2_copy().decomposition;
}

CopyDecomposition base_q2_copy()
{
    const Dimension n(2);
    Decomposition d{2, 1, Kind::Even, std::vector<TreeLabel>(n.edge_count(), 1)};
    const EdgeId leftover = edge_id(Edge{0b00, 1}, n);
    d.labels[leftover] = kLeftover;
    return CopyDecomposition{std::move(d), {leftover}};
}

CopyDecomposition double_even(const CopyDecomposition& copy)
{
    const Decomposition& prev = copy.decomposition;
    const unsigned c = prev.n;
    const unsigned m = prev.k;
    const unsigned n = c + 2;
    const Dimension dim(n, kHardMaxDimension);

    const std::uint64_t half_n = std::uint64_t{1} << (n - 1);
    const std::uint64_t span_c = std::uint64_t{1} << c;
    const auto bridge = static_cast<TreeLabel>(m);
    const auto closing = static_cast<TreeLabel>(m + 1);

    Decomposition next{n, m + 1, Kind::Even, std::vector<TreeLabel>(dim.edge_count(), 0)};

    // Copy 1 keeps its labels: its last tree becomes the bridge tree and its
    // matching stays leftover. Copies 2..4 donate their matching to the bridge
    // tree and their last tree to the closing tree.
    LabelMap first(m + 1);
    LabelMap rest(m + 1);
    for (unsigned j = 0; j <= m; ++j) {
        first[j] = static_cast<TreeLabel>(j);
        rest[j] = static_cast<TreeLabel>(j);
    }
    rest[kLeftover] = bridge;
    rest[m] = closing;

    replicate(prev.labels, c, n, kGray[0], first, next.labels);
    for (unsigned i = 1; i < 4; ++i) {
        replicate(prev.labels, c, n, kGray[i], rest, next.labels);
    }

    // Direction c: low half is M(1,2) (00-01), high half is M(3,4) (10-11).
    // Direction c+1: low half is M(1,4) (00-10), high half is M(2,3) (01-11).
    const std::uint64_t m12 = c * half_n;
    const std::uint64_t m34 = c * half_n + span_c;
    const std::uint64_t m14 = (c + 1) * half_n;
    const std::uint64_t m23 = (c + 1) * half_n + span_c;
    for (std::uint64_t s = 0; s < span_c; ++s) {
        next.labels[m12 + s] = bridge;
        next.labels[m34 + s] = bridge;
        next.labels[m23 + s] = bridge;
        next.labels[m14 + s] = closing;
    }

    // f_j joins the smaller endpoint of e_j in one copy to its twin.
    EdgeId last_f23 = 0;
    for (unsigned j = 1; j <= m; ++j) {
        const VertexId u = low_endpoint(copy.independents[j - 1], c);
        if (j < m) {
            const auto label = static_cast<TreeLabel>(j);
            next.labels[m12 + u] = label;
            next.labels[m23 + u] = label;
            next.labels[m34 + u] = label;
        } else {
            next.labels[m12 + u] = closing;
            next.labels[m34 + u] = closing;
            next.labels[m23 + u] = kLeftover;
            last_f23 = m23 + u;
        }
    }

    // Copy 1 is the identity embedding, so its edge (u, d) keeps squeeze(u, d)
    // and only the direction stride changes.
    std::vector<EdgeId> independents;
    independents.reserve(m + 1);
    const std::uint64_t half_c = std::uint64_t{1} << (c - 1);
    for (EdgeId old : copy.independents) {
        const std::uint64_t d = old / half_c;
        independents.push_back(d * half_n + old % half_c);
    }
    independents.push_back(last_f23);

    return CopyDecomposition{std::move(next), std::move(independents)};
}

Decomposition extend_odd(const CopyDecomposition& copy)
{
    const Decomposition& prev = copy.decomposition;
    const unsigned c = prev.n;
    const unsigned k = prev.k;
    const unsigned n = c + 1;
    const Dimension dim(n, kHardMaxDimension);

    const std::uint64_t half_n = std::uint64_t{1} << (n - 1);
    const auto last = static_cast<TreeLabel>(k);

    Decomposition next{n, k, Kind::Odd, std::vector<TreeLabel>(dim.edge_count(), 0)};

    LabelMap first(k + 1);
    LabelMap second(k + 1);
    for (unsigned j = 0; j <= k; ++j) {
        first[j] = static_cast<TreeLabel>(j);
        second[j] = static_cast<TreeLabel>(j);
    }
    // Second copy: matching joins tree k, tree k falls into the leftover forest.
    second[kLeftover] = last;
    second[k] = kLeftover;

    replicate(prev.labels, c, n, 0, first, next.labels);
    replicate(prev.labels, c, n, 1, second, next.labels);

    const std::uint64_t cross = c * half_n;
    for (std::uint64_t s = 0; s < half_n; ++s) {
        next.labels[cross + s] = last;
    }
    for (unsigned j = 1; j <= k; ++j) {
        const VertexId u = low_endpoint(copy.independents[j - 1], c);
        next.labels[cross + u] = j < k ? static_cast<TreeLabel>(j) : kLeftover;
    }
    return next;
}

CopyDecomposition construct_even_copy(unsigned k, unsigned cap, std::vector<EvenLevelSizes>* trace)
{
    if (k == 0) {
        throw CapError("even construction needs k >= 1");
    }
    static_cast<void>(Dimension(2 * k, cap));  // throws CapError

    CopyDecomposition current = base_q2_copy();
    for (unsigned level = 2; level <= k; ++level) {
        current = double_even(current);
        if (trace) {
            auto counts = label_counts(current.decomposition);
            counts.erase(counts.begin());
            trace->push_back(EvenLevelSizes{level - 1, std::move(counts)});
        }
    }
    return current;
}

Decomposition construct_even(unsigned k, unsigned cap, std::vector<EvenLevelSizes>* trace)
{
    return construct_even_copy(k, cap, trace).decomposition;
}

Decomposition construct_odd(unsigned k, unsigned cap)
{
    if (k == 0) {
        throw CapError("odd construction needs k >= 1");
    }
    static_cast<void>(Dimension(2 * k + 1, cap));  // throws CapError
    return extend_odd(construct_even_copy(k, cap));
}

Decomposition construct(unsigned n, unsigned cap)
{
    static_cast<void>(Dimension(n, cap));  // throws CapError
    if (n == 1) {
        return Decomposition{1, 0, Kind::Odd, std::vector<TreeLabel>{kLeftover}};
    }
    if (n % 2 == 0) {
        return construct_even(n / 2, cap);
    }
    return construct_odd((n - 1) / 2, cap);
}

} // namespace hcube
