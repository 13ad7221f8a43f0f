#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hcube/construct.hpp"
#include "hcube/verify.hpp"

#include <algorithm>
#include <random>

using namespace hcube;

TEST_CASE("is_spanning_tree on Q_2")
{
    const Dimension q2(2);
    CHECK(is_spanning_tree(make_edge_set(q2, {Edge{0b00, 0}, Edge{0b01, 1}, Edge{0b10, 0}})));
    CHECK_FALSE(is_spanning_tree(
        make_edge_set(q2, {Edge{0b00, 0}, Edge{0b00, 1}, Edge{0b01, 1}, Edge{0b10, 0}})));
    CHECK_FALSE(is_spanning_tree(make_edge_set(q2, {Edge{0b00, 0}, Edge{0b01, 1}})));
}

TEST_CASE("is_spanning_tree rejects a right-sized set with a cycle")
{
    // Q_3: the 4-cycle on the bottom face plus 3 more edges, 7 in total, but
    // vertex 111 is never reached.
    const Dimension q3(3);
    const EdgeSet s = make_edge_set(q3, {Edge{0b000, 0}, Edge{0b000, 1}, Edge{0b001, 1},
                                         Edge{0b010, 0}, Edge{0b000, 2}, Edge{0b001, 2},
                                         Edge{0b010, 2}});
    CHECK(s.size() == 7);
    CHECK_FALSE(is_spanning_tree(s));
    CHECK_FALSE(forest_components(s).is_forest);
}

TEST_CASE("is_matching")
{
    const Dimension q2(2);
    CHECK(is_matching(EdgeSet(q2)));
    CHECK_FALSE(is_matching(make_edge_set(q2, {Edge{0b00, 0}, Edge{0b00, 1}})));
    CHECK(is_matching(make_edge_set(q2, {Edge{0b00, 0}, Edge{0b10, 0}})));
    CHECK(is_matching(construct(8).edges_with(kLeftover)));
    CHECK(construct(8).count(kLeftover) == 4);
}

TEST_CASE("forest_components")
{
    CHECK(forest_components(construct(3).edges_with(kLeftover)) == ForestInfo{true, 1});
    CHECK(forest_components(construct(5).edges_with(kLeftover)) == ForestInfo{true, 2});
    CHECK(forest_components(construct(3).edges_with(1)) == ForestInfo{true, 1});
    CHECK(forest_components(EdgeSet(Dimension(3))) == ForestInfo{true, 0});
}

TEST_CASE("forest_components: a tree has one component, an m-matching has m")
{
    for (unsigned n = 2; n <= 8; ++n) {
        const Decomposition d = construct(n);
        for (unsigned j = 1; j <= d.k; ++j) {
            CHECK(forest_components(d.edges_with(static_cast<TreeLabel>(j))) == ForestInfo{true, 1});
        }
        if (n % 2 == 0) {
            CHECK(forest_components(d.edges_with(kLeftover)) == ForestInfo{true, n / 2});
        }
    }
    // Perfect matching of Q_4 along direction 0.
    const Dimension q4(4);
    std::vector<Edge> matching;
    for (VertexId u = 0; u < 16; u += 2) {
        matching.push_back(Edge{u, 0});
    }
    const EdgeSet s = make_edge_set(q4, matching);
    CHECK(is_matching(s));
    CHECK(forest_components(s) == ForestInfo{true, 8});
}

TEST_CASE("each tree of construct(6) is spanning")
{
    const Decomposition d = construct(6);
    for (unsigned j = 1; j <= 3; ++j) {
        CHECK(is_spanning_tree(d.edges_with(static_cast<TreeLabel>(j))));
    }
}

TEST_CASE("verify_decomposition accepts every construction for n in [1, 12]")
{
    for (unsigned n = 1; n <= 12; ++n) {
        CAPTURE(n);
        const VerifyReport r = verify_decomposition(construct(n));
        CHECK(r.overall);
        CHECK(r.partition_ok);
        CHECK(r.trees.size() == n / 2);
        CHECK(r.leftover.ok);
    }
    CHECK(verify_decomposition(construct(4)).leftover.size == 2);
}

TEST_CASE("moving a tree edge of Q_4 to the leftover is detected")
{
    Decomposition d = construct(4);
    const auto it = std::find(d.labels.begin(), d.labels.end(), TreeLabel{1});
    *it = kLeftover;
    const VerifyReport r = verify_decomposition(d);
    CHECK_FALSE(r.overall);
    CHECK(r.trees[0].edges == 14);
    CHECK_FALSE(r.trees[0].ok());
    CHECK(r.trees[1].ok());
    CHECK_FALSE(r.leftover.ok);
    CHECK(r.leftover.size == 3);
}

TEST_CASE("every single-label mutation is rejected for n <= 6")
{
    for (unsigned n = 1; n <= 6; ++n) {
        const Decomposition base = construct(n);
        for (EdgeId id = 0; id < base.labels.size(); ++id) {
            for (unsigned label = 0; label <= base.k; ++label) {
                if (label == base.labels[id]) {
                    continue;
                }
                Decomposition d = base;
                d.labels[id] = static_cast<TreeLabel>(label);
                CHECK_FALSE(verify_decomposition(d).overall);
            }
        }
    }
}

TEST_CASE("sampled single-label mutations are rejected for n = 7, 8")
{
    std::mt19937_64 rng(20261016);
    for (unsigned n : {7u, 8u}) {
        const Decomposition base = construct(n);
        std::uniform_int_distribution<EdgeId> pick_edge(0, base.labels.size() - 1);
        std::uniform_int_distribution<unsigned> pick_label(0, base.k);
        for (int trial = 0; trial < 300; ++trial) {
            const EdgeId id = pick_edge(rng);
            unsigned label = pick_label(rng);
            if (label == base.labels[id]) {
                label = (label + 1) % (base.k + 1);
            }
            Decomposition d = base;
            d.labels[id] = static_cast<TreeLabel>(label);
            CHECK_FALSE(verify_decomposition(d).overall);
        }
    }
}

TEST_CASE("malformed decompositions are structural errors")
{
    Decomposition d = construct(4);
    d.labels.pop_back();
    CHECK_THROWS_AS(verify_decomposition(d), StructuralError);

    d = construct(4);
    d.labels[0] = 3;
    CHECK_THROWS_AS(verify_decomposition(d), StructuralError);

    d = construct(4);
    d.kind = Kind::Odd;
    CHECK_THROWS_AS(verify_decomposition(d), StructuralError);

    d = construct(4);
    d.k = 1;
    CHECK_THROWS_AS(verify_decomposition(d), StructuralError);
}

TEST_CASE("the degenerate Q_1 leftover is a one-component forest")
{
    const VerifyReport r = verify_decomposition(construct(1));
    CHECK(r.overall);
    CHECK(r.leftover.components == 1);
    CHECK(r.leftover.size == 1);
}

TEST_CASE("text report")
{
    const std::string text = render_text(verify_decomposition(construct(5)));
    CHECK(text.find("overall: PASS") != std::string::npos);
    CHECK(text.find("components=2") != std::string::npos);
}
