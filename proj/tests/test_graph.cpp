#include "ktdraw/graph.hpp"

#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace ktdraw;

namespace {

// |E| = k n - k(k+1)/2, the edge count every k-tree must have.
long ktree_edge_count(int k, int n) {
    return static_cast<long>(k) * n - static_cast<long>(k) * (k + 1) / 2;
}

// Checks the contract of a partition: S nonempty, independent, and all of it
// k-simplicial; CaseA leaves K_k behind, CaseB hugs a pivot.
void check_partition_contract(const KTreeBuild& b, const PartitionCase& pc) {
    const Graph g = realize(b);
    const int k = b.k;
    REQUIRE_FALSE(pc.S.empty());
    const std::set<int> s_set(pc.S.begin(), pc.S.end());
    for (int u : pc.S)
        for (int v : pc.S)
            if (u < v) CHECK_FALSE(g.has_edge(u, v));
    const std::vector<int> simp = simplicial_vertices(g, k);
    const std::set<int> simp_set(simp.begin(), simp.end());
    for (int v : pc.S) CHECK(simp_set.count(v) == 1);

    // The rest of the graph, relabelled.
    Graph h;
    std::vector<int> to_h(g.vertex_count, -1), from_h;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (s_set.count(v)) continue;
        to_h[v] = static_cast<int>(from_h.size());
        from_h.push_back(v);
    }
    h.vertex_count = static_cast<int>(from_h.size());
    for (const Edge& e : g.edges)
        if (!s_set.count(e.first) && !s_set.count(e.second))
            h.add_edge(to_h[e.first], to_h[e.second]);

    if (pc.kind == PartitionCase::Kind::A) {
        CHECK(h.vertex_count == k);
        CHECK(static_cast<long>(h.edges.size()) == static_cast<long>(k) * (k - 1) / 2);
    } else {
        const int v = pc.pivot_v;
        REQUIRE(v >= 0);
        CHECK(s_set.count(v) == 0);
        const std::vector<int> h_simp = simplicial_vertices(h, k);
        CHECK(std::set<int>(h_simp.begin(), h_simp.end()).count(to_h[v]) == 1);
        // Every member of S sees v plus all but one neighbour of v.
        std::set<int> closed_nv{v};
        for (int u = 0; u < g.vertex_count; ++u)
            if (!s_set.count(u) && g.has_edge(u, v)) closed_nv.insert(u);
        for (int w : pc.S) {
            std::set<int> nw;
            for (int u = 0; u < g.vertex_count; ++u)
                if (g.has_edge(u, w)) nw.insert(u);
            CHECK(nw.size() == closed_nv.size() - 1);
            int missing = 0;
            for (int u : closed_nv)
                if (!nw.count(u)) ++missing;
            CHECK(missing == 1);
            CHECK(nw.count(v) == 1);
        }
    }
}

}  // namespace

TEST_CASE("make_edge normalizes endpoint order") {
    CHECK(make_edge(3, 1) == Edge{1, 3});
    CHECK(make_edge(1, 3) == Edge{1, 3});
    CHECK_THROWS_AS(make_edge(2, 2), std::invalid_argument);
}

TEST_CASE("complete_split counts") {
    const Graph g = realize(complete_split(3, 5));
    CHECK(g.vertex_count == 8);
    CHECK(g.edges.size() == 18);
    CHECK(realize(complete_split(1, 1)).edges.size() == 1);
    // K_{2,3} plus the clique edge.
    CHECK(realize(complete_split(2, 3)).edges.size() == 7);
}

TEST_CASE("every generated build satisfies the k-tree edge formula") {
    for (int k = 1; k <= 5; ++k)
        for (int n : {k + 1, k + 4, k + 17}) {
            const KTreeBuild b = random_ktree(k, n, 91 * k + n);
            const Graph g = realize(b);
            CHECK(g.vertex_count == n);
            CHECK(static_cast<long>(g.edges.size()) == ktree_edge_count(k, n));
        }
    CHECK(static_cast<long>(realize(qk_graph(3)).edges.size()) == ktree_edge_count(3, 250));
}

TEST_CASE("realize rejects malformed builds") {
    KTreeBuild b;
    b.k = 2;
    b.base = {0, 1, 2};
    b.additions.push_back({3, {0, 1}});
    realize(b);  // fine so far
    b.additions.push_back({4, {0, 3}});
    realize(b);
    // Clique that is not a clique: 1 and 3 are not adjacent.
    b.additions.push_back({5, {1, 3}});
    CHECK_THROWS_AS(realize(b), std::invalid_argument);
    b.additions.pop_back();
    // New vertex inside its own clique.
    b.additions.push_back({5, {5, 0}});
    CHECK_THROWS_AS(realize(b), std::invalid_argument);
}

TEST_CASE("ktree_certify round-trips generator output") {
    for (int k = 1; k <= 4; ++k) {
        const KTreeBuild b = random_ktree(k, k + 12, 5 * k);
        const Graph g = realize(b);
        const KTreeBuild c = ktree_certify(g, k);
        CHECK(realize(c).edges == g.edges);
        CHECK(c.k == k);
    }
}

TEST_CASE("ktree_certify failure diagnostics") {
    // K_4 at k=3 is the base case alone.
    const KTreeBuild base = ktree_certify(testsupport::complete_graph(4), 3);
    CHECK(base.additions.empty());
    CHECK(base.base.size() == 4);

    // C_4 has no degree-1 vertex.
    try {
        ktree_certify(testsupport::cycle_graph(4), 1);
        FAIL("expected NotAKTree");
    } catch (const NotAKTree& e) {
        CHECK(e.stage == "wrong edge count");
    }
    // Right edge count for a 2-tree on five vertices but no simplicial
    // vertex: K_5 minus {04, 14, 23}, whose only degree-2 vertex has
    // non-adjacent neighbours.
    Graph stuck = testsupport::complete_graph(5);
    stuck.edges.erase(make_edge(0, 4));
    stuck.edges.erase(make_edge(1, 4));
    stuck.edges.erase(make_edge(2, 3));
    try {
        ktree_certify(stuck, 2);
        FAIL("expected NotAKTree");
    } catch (const NotAKTree& e) {
        CHECK(e.stage == "no simplicial vertex found");
    }
    CHECK_THROWS_AS(ktree_certify(testsupport::complete_graph(3), 3), NotAKTree);

    // K*_{3,5} certifies with the five independent vertices as additions.
    const KTreeBuild split = ktree_certify(realize(complete_split(3, 5)), 3);
    CHECK(split.additions.size() == 5);
}

TEST_CASE("random_ktree is reproducible and validates its arguments") {
    const KTreeBuild a = random_ktree(3, 30, 7);
    const KTreeBuild b = random_ktree(3, 30, 7);
    CHECK(a.base == b.base);
    REQUIRE(a.additions.size() == b.additions.size());
    for (size_t i = 0; i < a.additions.size(); ++i) {
        CHECK(a.additions[i].v == b.additions[i].v);
        CHECK(a.additions[i].clique == b.additions[i].clique);
    }
    CHECK(realize(random_ktree(3, 30, 8)).edges != realize(a).edges);
    CHECK_THROWS_AS(random_ktree(2, 2, 0), std::invalid_argument);
    // A 1-tree is a tree.
    const Graph t = realize(random_ktree(1, 5, 0));
    CHECK(t.edges.size() == 4);
    CHECK(testsupport::is_forest({t.edges.begin(), t.edges.end()}, 5));
}

TEST_CASE("lemma_partition on the fixed examples") {
    const PartitionCase k4 = lemma_partition(ktree_certify(testsupport::complete_graph(4), 3));
    CHECK(k4.kind == PartitionCase::Kind::A);
    CHECK(k4.S.size() == 1);

    const PartitionCase split = lemma_partition(complete_split(3, 5));
    CHECK(split.kind == PartitionCase::Kind::A);
    CHECK(split.S == std::vector<int>{3, 4, 5, 6, 7});

    // A strip of triangles: the simplicial layer leaves a triangle behind,
    // whose own simplicial vertex 1 is hugged by S = {0}.
    KTreeBuild strip;
    strip.k = 2;
    strip.base = {0, 1, 2};
    strip.additions.push_back({3, {1, 2}});
    strip.additions.push_back({4, {2, 3}});
    const PartitionCase pc = lemma_partition(strip);
    CHECK(pc.kind == PartitionCase::Kind::B);
    check_partition_contract(strip, pc);
}

TEST_CASE("lemma_partition contract holds on random builds") {
    for (int k = 1; k <= 4; ++k)
        for (std::uint64_t seed = 1; seed <= 6; ++seed) {
            const KTreeBuild b = random_ktree(k, k + 2 + 3 * static_cast<int>(seed), seed);
            check_partition_contract(b, lemma_partition(b));
        }
}

TEST_CASE("qk_graph sizes") {
    const KTreeBuild q = qk_graph(3);
    const Graph g = realize(q);
    CHECK(g.vertex_count == 250);
    CHECK(g.edges.size() == 744);
    CHECK_THROWS_AS(qk_graph(2), std::invalid_argument);
}

TEST_CASE("star_lb_graph layout") {
    const StarLbGadget g2 = star_lb_graph(2);
    CHECK(g2.graph.vertex_count == 12);
    CHECK(g2.graph.edges.size() == 16);
    CHECK(g2.clique.size() == 2);
    CHECK(g2.s_vertices.size() == 5);
    CHECK(g2.pendants.size() == 5);
    for (size_t i = 0; i < g2.pendants.size(); ++i) {
        CHECK(g2.graph.has_edge(g2.pendants[i], g2.s_vertices[i]));
        // A pendant sees nothing else.
        int deg = 0;
        for (int u = 0; u < g2.graph.vertex_count; ++u)
            deg += g2.graph.has_edge(g2.pendants[i], u);
        CHECK(deg == 1);
    }

    const StarLbGadget g1 = star_lb_graph(1);
    CHECK(g1.graph.vertex_count == 5);
    CHECK(g1.graph.edges.size() == 4);
    CHECK(g1.s_vertices.size() == 2);
}

TEST_CASE("ktree_lift embeds into a one-larger tree") {
    // The base alone becomes the next complete graph.
    const KTreeBuild k4 = ktree_certify(testsupport::complete_graph(4), 3);
    const Graph lifted_base = realize(ktree_lift(k4));
    CHECK(lifted_base.vertex_count == 5);
    CHECK(lifted_base.edges.size() == 10);

    // P_3 as a 1-tree turns into a 2-tree on four vertices containing it.
    KTreeBuild p3;
    p3.k = 1;
    p3.base = {0, 1};
    p3.additions.push_back({2, {1}});
    const KTreeBuild lifted_p3 = ktree_lift(p3);
    CHECK(lifted_p3.k == 2);
    const Graph lg = realize(lifted_p3);
    CHECK(lg.vertex_count == 4);
    for (const Edge& e : realize(p3).edges) CHECK(lg.edges.count(e) == 1);
    ktree_certify(lg, 2);

    // A random 3-tree lifts to a certifying 4-tree with all edges kept.
    const KTreeBuild b = random_ktree(3, 30, 17);
    const Graph g = realize(b);
    const KTreeBuild lifted = ktree_lift(b);
    CHECK(lifted.k == 4);
    const Graph h = realize(lifted);
    CHECK(h.vertex_count == 31);
    CHECK(g.edges.size() == 84);
    for (const Edge& e : g.edges) CHECK(h.edges.count(e) == 1);
    ktree_certify(h, 4);
}
