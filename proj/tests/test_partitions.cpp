#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "usp/error.hpp"
#include "usp/harness.hpp"
#include "usp/vertex_partitions.hpp"

using namespace usp;

TEST_CASE("class and complement partitions on fixtures") {
    auto m8 = fixtures::m8();
    CHECK(class_partition(m8.relation, 1).blocks ==
          std::vector<std::vector<int>>{{0, 4}, {1, 5}, {2, 6}, {3, 7}});
    CHECK(class_partition(m8.relation, 0).block_count() == 1);
    CHECK(complement_partition(m8.relation, 0).blocks ==
          std::vector<std::vector<int>>{{0, 4}, {1, 5}, {2, 6}, {3, 7}});
    CHECK(complement_partition(m8.relation, 1).block_count() == 1);

    auto prism = fixtures::prism();
    VertexPartition layers = complement_partition(prism.relation, 1);
    CHECK(layers.block_count() == 2);
    for (const auto& block : layers.blocks) CHECK(block.size() == 6);
    CHECK(layers == class_partition(prism.relation, 0));

    EdgeRelation c4 = compute_delta(fixtures::c4());
    CHECK(class_partition(c4, 0).blocks == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
}

TEST_CASE("common refinement") {
    auto m8 = fixtures::m8();
    CHECK(common_refinement(m8.relation).blocks ==
          std::vector<std::vector<int>>{{0, 4}, {1, 5}, {2, 6}, {3, 7}});

    auto prism = fixtures::prism();
    CHECK(common_refinement(prism.relation) == VertexPartition::singletons(12));

    // single class: the complement is empty, so every block is a singleton
    EdgeRelation one = EdgeRelation::single_class(fixtures::m8().graph);
    CHECK(common_refinement(one) == VertexPartition::singletons(8));
}

TEST_CASE("the twelve-vertex three-class example") {
    auto m6k2 = fixtures::m6k2();
    CHECK(satisfies_s1(m6k2.relation).holds);
    CHECK(complement_partition(m6k2.relation, 0).blocks ==
          std::vector<std::vector<int>>{{0, 3, 6, 9}, {1, 4, 7, 10}, {2, 5, 8, 11}});
    CHECK(complement_partition(m6k2.relation, 1).block_count() == 1);
    CHECK(complement_partition(m6k2.relation, 2).blocks ==
          std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}});
    CHECK(common_refinement(m6k2.relation).blocks ==
          std::vector<std::vector<int>>{
              {0, 3}, {1, 4}, {2, 5}, {6, 9}, {7, 10}, {8, 11}});

    // joining chords and rungs leaves the partition unchanged
    EdgeRelation merged = merge_classes(m6k2.relation, {1, 2});
    CHECK(common_refinement(merged) == common_refinement(m6k2.relation));
}

TEST_CASE("neighbor sets within a class") {
    auto m8 = fixtures::m8();
    CHECK(neighbor_set_in_class(m8.relation, 0, 1) == std::vector<int>{4});
    CHECK(neighbor_set_in_class(m8.relation, 0, 0) == std::vector<int>{1, 7});

    EdgeRelation c4 = compute_delta(fixtures::c4());
    // class 1 holds {(0,3),(1,2)}
    CHECK(neighbor_set_in_class(c4, 0, 1) == std::vector<int>{3});

    CHECK_THROWS_AS((void)neighbor_set_in_class(c4, 0, 9), Error);
    CHECK_THROWS_AS((void)neighbor_set_in_class(c4, 17, 0), Error);
}

TEST_CASE("equitability and degree matrices") {
    auto m8 = fixtures::m8();
    EquitabilityResult eq = is_equitable(*m8.graph, common_refinement(m8.relation));
    REQUIRE(eq.equitable());
    CHECK(eq.matrix->m == std::vector<std::vector<int>>{
                              {1, 1, 0, 1}, {1, 1, 1, 0}, {0, 1, 1, 1}, {1, 0, 1, 1}});

    Graph c4 = *fixtures::c4();
    VertexPartition alt = VertexPartition::from_block_assignment(4, {0, 1, 0, 1});
    EquitabilityResult eq2 = is_equitable(c4, alt);
    REQUIRE(eq2.equitable());
    CHECK(eq2.matrix->m == std::vector<std::vector<int>>{{0, 2}, {2, 0}});

    Graph p3 = *fixtures::path(3);
    VertexPartition ends = VertexPartition::from_block_assignment(3, {0, 1, 0});
    EquitabilityResult eq3 = is_equitable(p3, ends);
    REQUIRE(eq3.equitable());
    CHECK(eq3.matrix->m == std::vector<std::vector<int>>{{0, 1}, {2, 0}});

    VertexPartition bad = VertexPartition::from_block_assignment(3, {0, 0, 1});
    EquitabilityResult eq4 = is_equitable(p3, bad);
    REQUIRE_FALSE(eq4.equitable());
    CHECK(eq4.violation->block_a == 0);
    CHECK(eq4.violation->block_b == 1);
    CHECK(eq4.violation->x == 0);
    CHECK(eq4.violation->x_prime == 1);

    CHECK_THROWS_AS((void)is_equitable(p3, alt), Error);  // wrong vertex count
}

TEST_CASE("equitability matches the brute-force oracle") {
    InstanceGenerator gen(606);
    for (int trial = 0; trial < 50; ++trial) {
        EdgeRelation r = gen.next_certified();
        VertexPartition p = common_refinement(r);
        EquitabilityResult eq = is_equitable(r.g(), p);
        auto expected = oracle::equitable_brute(r.g(), p);
        CHECK(eq.equitable() == expected.has_value());
        if (eq.equitable()) CHECK(eq.matrix->m == *expected);
    }
}

TEST_CASE("the common refinement of a certified relation is equitable") {
    InstanceGenerator gen(8181);
    for (int trial = 0; trial < 60; ++trial) {
        EdgeRelation r = gen.next_certified();
        REQUIRE(certify_usp(r).certified());
        CHECK(is_equitable(r.g(), common_refinement(r)).equitable());
    }
    // each complement partition is also equitable on the
    // class subgraph
    for (auto fixture : {fixtures::m8(), fixtures::prism(), fixtures::fig1()}) {
        const Graph& g = *fixture.graph;
        for (int c = 0; c < fixture.relation.num_classes; ++c) {
            std::vector<Edge> phi;
            EdgeSubset s = fixture.relation.class_edges(c);
            for (size_t e = 0; e < g.edges.size(); ++e)
                if (s[e]) phi.push_back(g.edges[e]);
            Graph g_phi = Graph::build_relaxed(g.n, phi);
            CHECK(is_equitable(g_phi, complement_partition(fixture.relation, c)).equitable());
        }
    }
}

TEST_CASE("refinement blocks match per-vertex intersections") {
    InstanceGenerator gen(404);
    for (int trial = 0; trial < 40; ++trial) {
        EdgeRelation r = (trial % 2) ? gen.next_certified() : gen.next_random();
        VertexPartition p = common_refinement(r);
        for (int x = 0; x < r.g().n; ++x)
            CHECK(p.blocks[p.block_of[x]] == oracle::vr_brute(r, x));
    }
}

TEST_CASE("monotonicity of the refinement under coarsening") {
    InstanceGenerator gen(2711);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        EdgeRelation q = gen.next_certified();
        if (q.num_classes < 2) continue;
        std::uniform_int_distribution<int> pick(0, q.num_classes - 1);
        int a = pick(rng), b = pick(rng);
        if (a == b) continue;
        EdgeRelation r = merge_classes(q, {a, b});
        // V_R(x) is contained in V_Q(x) for the coarser R
        VertexPartition pr = common_refinement(r);
        VertexPartition pq = common_refinement(q);
        CHECK(partition_refines(pr, pq));
    }
}

TEST_CASE("neighborhood-cut behavior on fixtures") {
    for (auto fixture : {fixtures::m8(), fixtures::prism(), fixtures::m6k2()}) {
        const EdgeRelation& r = fixture.relation;
        const Graph& g = *fixture.graph;
        VertexPartition vr = common_refinement(r);
        for (int c = 0; c < r.num_classes; ++c) {
            VertexPartition pbar = complement_partition(r, c);
            for (int x = 0; x < g.n; ++x) {
                for (int y = 0; y < g.n; ++y) {
                    auto nb = neighbor_set_in_class(r, x, c);
                    std::vector<int> in_vr, in_pbar;
                    for (int z : nb) {
                        if (vr.block_of[z] == vr.block_of[y]) in_vr.push_back(z);
                        if (pbar.block_of[z] == pbar.block_of[y]) in_pbar.push_back(z);
                    }
                    // (1) nonemptiness propagates over the whole block of x
                    if (!in_vr.empty()) {
                        for (int u : vr.blocks[vr.block_of[x]]) {
                            auto nbu = neighbor_set_in_class(r, u, c);
                            bool hit = false;
                            for (int z : nbu)
                                if (vr.block_of[z] == vr.block_of[y]) hit = true;
                            CHECK(hit);
                        }
                        // (2) the cut equals the complement-component cut
                        CHECK(in_vr == in_pbar);
                    }
                }
            }
        }
    }
}
