#include "ktdraw/book.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "ktdraw/verify.hpp"
#include "support.hpp"

using namespace ktdraw;

namespace {

std::set<int> used_pages(const BookEmbedding& e) {
    std::set<int> pages;
    for (const auto& [edge, p] : e.page_of) pages.insert(p);
    return pages;
}

// The guarantees every star-forest embedding advertises, checked in one
// place: page budget, verified star-forest pages, colourful simplicial
// vertices (or at least one vertex for the complete graph).
void check_star_embedding(const KTreeBuild& b) {
    const Graph g = realize(b);
    const BookEmbedding e = embed_star_forests(b);
    CHECK(e.page_count <= b.k + 1);
    const Report r = check_book(e, g, LayerMode::StarForest);
    CHECK(r.passed);
    const std::vector<int> simp = simplicial_vertices(g, b.k);
    if (g.vertex_count > b.k + 1) {
        for (int v : simp) CHECK(check_colourful(e.page_of, v));
    } else {
        bool any = false;
        for (int v = 0; v < g.vertex_count; ++v)
            any = any || check_colourful(e.page_of, v);
        CHECK(any);
    }
}

}  // namespace

TEST_CASE("book_crosses on a four-vertex order") {
    const std::vector<int> order{0, 1, 2, 3};
    CHECK(book_crosses(order, make_edge(0, 2), make_edge(1, 3)));
    CHECK_FALSE(book_crosses(order, make_edge(0, 1), make_edge(2, 3)));
    CHECK_FALSE(book_crosses(order, make_edge(0, 1), make_edge(0, 2)));
}

TEST_CASE("book_crosses is symmetric and rotation invariant") {
    std::mt19937_64 rng(21);
    const int n = 8;
    int crossings = 0;
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<int> order(n);
        for (int v = 0; v < n; ++v) order[v] = v;
        for (int i = n - 1; i > 0; --i)
            std::swap(order[i], order[testsupport::uniform_below(rng, i + 1)]);
        auto pick = [&] {
            int u = static_cast<int>(testsupport::uniform_below(rng, n));
            int v;
            do {
                v = static_cast<int>(testsupport::uniform_below(rng, n));
            } while (v == u);
            return make_edge(u, v);
        };
        const Edge e = pick(), f = pick();
        const bool x = book_crosses(order, e, f);
        crossings += x;
        CHECK(book_crosses(order, f, e) == x);
        std::vector<int> rotated(order.begin() + 3, order.end());
        rotated.insert(rotated.end(), order.begin(), order.begin() + 3);
        CHECK(book_crosses(rotated, e, f) == x);
    }
    CHECK(crossings > 0);
}

TEST_CASE("zigzag_complete page formula for four vertices") {
    const BookEmbedding e = zigzag_complete(2);
    CHECK(e.page_count == 2);
    CHECK(e.order == std::vector<int>{0, 1, 2, 3});
    CHECK(e.page_of.at(make_edge(0, 2)) == 1);
    CHECK(e.page_of.at(make_edge(0, 3)) == 1);
    CHECK(e.page_of.at(make_edge(1, 2)) == 1);
    CHECK(e.page_of.at(make_edge(0, 1)) == 2);
    CHECK(e.page_of.at(make_edge(1, 3)) == 2);
    CHECK(e.page_of.at(make_edge(2, 3)) == 2);
}

TEST_CASE("zigzag_complete pages are noncrossing for all small k") {
    CHECK(zigzag_complete(1).page_of.size() == 1);
    for (int k = 1; k <= 5; ++k) {
        const BookEmbedding e = zigzag_complete(k);
        const Graph g = testsupport::complete_graph(2 * k);
        CHECK(e.page_of.size() == g.edges.size());
        CHECK(e.page_count == k);
        CHECK(check_book(e, g, LayerMode::Noncrossing).passed);
    }
}

TEST_CASE("embed_star_forests on complete graphs") {
    // K_4 at k=3: three pages, stars rooted at the first three vertices.
    const KTreeBuild k4 = ktree_certify(testsupport::complete_graph(4), 3);
    const BookEmbedding e4 = embed_star_forests(k4);
    CHECK(used_pages(e4) == std::set<int>{1, 2, 3});
    for (const auto& [edge, p] : e4.page_of) CHECK(p == edge.first + 1);
    check_star_embedding(k4);

    // K_3 at k=2: two pages.
    const KTreeBuild k3 = ktree_certify(testsupport::complete_graph(3), 2);
    const BookEmbedding e3 = embed_star_forests(k3);
    CHECK(used_pages(e3) == std::set<int>{1, 2});
    CHECK(e3.page_of.at(make_edge(0, 1)) == 1);
    CHECK(e3.page_of.at(make_edge(0, 2)) == 1);
    CHECK(e3.page_of.at(make_edge(1, 2)) == 2);
}

TEST_CASE("embed_star_forests guarantees on random builds") {
    for (int k = 1; k <= 5; ++k)
        for (std::uint64_t seed = 1; seed <= 3; ++seed)
            check_star_embedding(random_ktree(k, k + 3 + 9 * static_cast<int>(seed), seed));
    check_star_embedding(complete_split(3, 5));
    check_star_embedding(random_ktree(2, 60, 33));
}

TEST_CASE("embed_2tree_forests guarantees") {
    // K_3: two pages, two colourful vertices.
    const KTreeBuild k3 = ktree_certify(testsupport::complete_graph(3), 2);
    const BookEmbedding e3 = embed_2tree_forests(k3);
    CHECK(e3.page_count <= 2);
    CHECK(check_book(e3, realize(k3), LayerMode::Forest).passed);
    int colourful = 0;
    for (int v = 0; v < 3; ++v) colourful += check_colourful(e3.page_of, v);
    CHECK(colourful >= 2);

    for (const KTreeBuild& b :
         {complete_split(2, 3), random_ktree(2, 100, 5), random_ktree(2, 40, 9)}) {
        const Graph g = realize(b);
        const BookEmbedding e = embed_2tree_forests(b);
        CHECK(e.page_count <= 2);
        CHECK(check_book(e, g, LayerMode::Forest).passed);
        if (g.vertex_count > 3)
            for (int v : simplicial_vertices(g, 2)) CHECK(check_colourful(e.page_of, v));
    }

    CHECK_THROWS_AS(embed_2tree_forests(random_ktree(3, 10, 1)), std::invalid_argument);
}

TEST_CASE("pages partition the edge set exactly") {
    for (const KTreeBuild& b : {random_ktree(3, 25, 2), complete_split(4, 4)}) {
        const Graph g = realize(b);
        const BookEmbedding e = embed_star_forests(b);
        CHECK(e.page_of.size() == g.edges.size());
        for (const auto& [edge, p] : e.page_of) {
            CHECK(g.edges.count(edge) == 1);
            CHECK(p >= 1);
            CHECK(p <= e.page_count);
        }
        std::vector<int> sorted = e.order;
        std::sort(sorted.begin(), sorted.end());
        for (int v = 0; v < g.vertex_count; ++v) CHECK(sorted[v] == v);
    }
}
