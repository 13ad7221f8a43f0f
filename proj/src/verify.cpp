#include "hcube/verify.hpp"

#include <numeric>
#include <sstream>

namespace hcube {

UnionFind::UnionFind(std::size_t size) : parent_(size), size_(size, 1), sets_(size)
{
    std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t UnionFind::find(std::uint32_t x)
{
    while (parent_[x] != x) {
        parent_[x] = parent_[parent_[x]];
        x = parent_[x];
    }
    return x;
}

bool UnionFind::unite(std::uint32_t x, std::uint32_t y)
{
    x = find(x);
    y = find(y);
    if (x == y) {
        return false;
    }
    if (size_[x] < size_[y]) {
        std::swap(x, y);
    }
    parent_[y] = x;
    size_[x] += size_[y];
    --sets_;
    return true;
}

namespace {

struct Scan {
    std::uint64_t touched = 0;  // vertices incident to at least one edge
    std::uint64_t merges = 0;   // edges that joined two components
    bool matching = true;
};

Scan scan(const EdgeSet& s)
{
    const Dimension n = s.dimension();
    UnionFind uf(n.vertex_count());
    std::vector<std::uint8_t> degree(n.vertex_count(), 0);
    Scan out;
    for (EdgeId id : s) {
        const Edge e = edge_from_id(id, n);
        for (VertexId x : {e.u, e.v()}) {
            if (degree[x] == 0) {
                ++out.touched;
            } else {
                out.matching = false;
            }
            degree[x] = 1;
        }
        if (uf.unite(e.u, e.v())) {
            ++out.merges;
        }
    }
    return out;
}

} // namespace

bool is_spanning_tree(const EdgeSet& s)
{
    const Dimension n = s.dimension();
    if (s.size() != n.vertex_count() - 1) {
        return false;
    }
    const Scan r = scan(s);
    // Every merge removes one component; 2^n - 1 merges means one component.
    return r.touched == n.vertex_count() && r.merges == n.vertex_count() - 1;
}

bool is_matching(const EdgeSet& s)
{
    return scan(s).matching;
}

ForestInfo forest_components(const EdgeSet& s)
{
    const Scan r = scan(s);
    // Acyclic iff every edge merged two components; touched vertices minus
    // merges leaves the number of edge-containing components.
    return ForestInfo{r.merges == s.size(), r.touched - r.merges};
}

VerifyReport verify_decomposition(const Decomposition& d)
{
    check_shape(d);
    const Dimension n = d.dimension();

    VerifyReport report;
    report.n = d.n;
    report.k = d.k;
    report.kind = d.kind;

    // Bucket edge ids by label in one pass.
    std::vector<std::vector<EdgeId>> buckets(d.k + 1);
    for (auto& b : buckets) {
        b.reserve(d.k == 0 ? d.labels.size() : n.vertex_count());
    }
    for (EdgeId id = 0; id < d.labels.size(); ++id) {
        buckets[d.labels[id]].push_back(id);
    }
    std::uint64_t covered = 0;
    for (const auto& b : buckets) {
        covered += b.size();
    }
    report.partition_ok = covered == n.edge_count();

    bool all_ok = report.partition_ok;
    for (unsigned j = 1; j <= d.k; ++j) {
        const EdgeSet tree(n, std::move(buckets[j]));
        TreeCheck check;
        check.label = j;
        check.edges = tree.size();
        check.cardinality_ok = tree.size() == n.vertex_count() - 1;
        const Scan r = scan(tree);
        check.spans_all = r.touched == n.vertex_count();
        check.connected = check.spans_all && r.touched - r.merges == 1;
        all_ok = all_ok && check.ok();
        report.trees.push_back(check);
    }

    const EdgeSet leftover(n, std::move(buckets[kLeftover]));
    LeftoverCheck& lc = report.leftover;
    lc.size = leftover.size();
    lc.is_matching = is_matching(leftover);
    const ForestInfo forest = forest_components(leftover);
    lc.is_forest = forest.is_forest;
    lc.components = forest.components;
    if (d.kind == Kind::Even) {
        lc.expected_size = d.k;
        lc.expected_components = d.k;
        lc.ok = lc.is_matching && lc.size == lc.expected_size;
    } else {
        lc.expected_size = (std::uint64_t{1} << (2 * d.k)) + d.k;
        lc.expected_components = d.k == 0 ? 1 : d.k;
        lc.ok = lc.is_forest && lc.components == lc.expected_components &&
                lc.size == lc.expected_size;
    }
    report.overall = all_ok && lc.ok;
    return report;
}

std::string render_text(const VerifyReport& r)
{
    std::ostringstream os;
    os << "n=" << r.n << " k=" << r.k << " kind=" << to_string(r.kind) << '\n';
    os << "partition: " << (r.partition_ok ? "ok" : "FAIL") << '\n';
    for (const auto& t : r.trees) {
        os << "tree " << t.label << ": edges=" << t.edges << " spans=" << (t.spans_all ? "yes" : "no")
           << " connected=" << (t.connected ? "yes" : "no") << " -> " << (t.ok() ? "ok" : "FAIL")
           << '\n';
    }
    const auto& l = r.leftover;
    os << "leftover: size=" << l.size << " (expected " << l.expected_size << ")";
    if (r.kind == Kind::Even) {
        os << " matching=" << (l.is_matching ? "yes" : "no");
    } else {
        os << " forest=" << (l.is_forest ? "yes" : "no") << " components=" << l.components
           << " (expected " << l.expected_components << ")";
    }
    os << " -> " << (l.ok ? "ok" : "FAIL") << '\n';
    os << "overall: " << (r.overall ? "PASS" : "FAIL") << '\n';
    return os.str();
}

} // namespace hcube
