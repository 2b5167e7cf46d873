// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#include "ktdraw/book.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "peel_internal.hpp"

namespace ktdraw {

using detail::count_alive;
using detail::partition_step;
using detail::Peeler;
using detail::SubPartition;

bool book_crosses(const std::vector<int>& order, const Edge& e, const Edge& f) {
    if (e.first == f.first || e.first == f.second || e.second == f.first ||
        e.second == f.second)
        return false;
    std::map<int, int> pos;
    for (size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
    const int n = static_cast<int>(order.size());
    const int a = pos.at(e.first), b = pos.at(e.second);
    // f endpoint strictly inside the arc from a to b (walking forward from a).
    auto inside = [&](int p) {
        const int rel_b = (b - a + n) % n;
        const int rel_p = (p - a + n) % n;
        return 0 < rel_p && rel_p < rel_b;
    };
    return inside(pos.at(f.first)) != inside(pos.at(f.second));
}

namespace {

// CaseA of the star-forest construction: alive = K_k plus the independent
// set S; pages are stars rooted at the clique vertices.
void star_case_a(const Peeler& p, const std::vector<bool>& alive,
                 const std::vector<int>& S, BookEmbedding& emb) {
    std::vector<bool> in_S(p.g.vertex_count, false);
    for (int w : S) in_S[w] = true;
    std::vector<int> clique;
    for (int v = 0; v < p.g.vertex_count; ++v)
        if (alive[v] && !in_S[v]) clique.push_back(v);
    assert(static_cast<int>(clique.size()) == p.k);

    emb.order = clique;
    emb.order.insert(emb.order.end(), S.begin(), S.end());
    std::map<int, int> label;  // clique vertex -> 1-based page
    for (size_t i = 0; i < clique.size(); ++i) label[clique[i]] = static_cast<int>(i) + 1;
    for (size_t i = 0; i < clique.size(); ++i)
        for (size_t j = i + 1; j < clique.size(); ++j)
            emb.page_of[make_edge(clique[i], clique[j])] = label[clique[i]];
    for (int w : S)
        for (int u : p.alive_neighbours(w, alive))
            emb.page_of[make_edge(w, u)] = label[u];
}

// nominee < 0 means none; a nonnegative nominee must end up colourful.
void star_recurse(const Peeler& p, std::vector<bool>& alive, int nominee,
                  BookEmbedding& emb) {
    const int n_alive = count_alive(alive);
    assert(n_alive >= p.k + 1);

    if (n_alive == p.k + 1) {
        // Complete base: treat the nominee (or lowest vertex) as the sole
        // S-vertex of a CaseA split.
        int w = nominee;
        if (w < 0)
            for (int v = 0; v < p.g.vertex_count && w < 0; ++v)
                if (alive[v]) w = v;
        star_case_a(p, alive, {w}, emb);
        return;
    }

    const SubPartition sp = partition_step(p, alive);
    if (sp.case_a) {
        star_case_a(p, alive, sp.S, emb);
        return;
    }

    const int v = sp.pivot;
    std::vector<bool> sub = alive;
    for (int w : sp.S) sub[w] = false;
    const int sub_nominee = (count_alive(sub) == p.k + 1) ? v : -1;
    star_recurse(p, sub, sub_nominee, emb);

    // v is colourful with degree k, so exactly one page in 1..k+1 is absent
    // at v; swap pages to make it k+1 before adding the new spokes at v.
    const auto nb_v = p.alive_neighbours(v, sub);
    assert(static_cast<int>(nb_v.size()) == p.k);
    std::vector<bool> present(p.k + 2, false);
    for (int u : nb_v) {
        const int c = emb.page_of.at(make_edge(v, u));
        assert(!present[c]);
        present[c] = true;
    }
    int missing = -1;
    for (int c = 1; c <= p.k + 1; ++c)
        if (!present[c]) missing = c;
    if (missing < 0) throw std::logic_error("star_recurse: pivot not colourful");
    if (missing != p.k + 1) {
        for (auto& [e, c] : emb.page_of) {
            if (c == missing)
                c = p.k + 1;
            else if (c == p.k + 1)
                c = missing;
        }
    }

    std::map<int, int> label;  // u_i -> i
    for (int u : nb_v) label[u] = emb.page_of.at(make_edge(v, u));

    const auto it = std::find(emb.order.begin(), emb.order.end(), v);
    assert(it != emb.order.end());
    emb.order.insert(std::next(it), sp.S.begin(), sp.S.end());

    for (int w : sp.S) {
        for (int u : p.alive_neighbours(w, alive)) {
            if (u == v)
                emb.page_of[make_edge(w, v)] = p.k + 1;
            else
                emb.page_of[make_edge(w, u)] = label.at(u);
        }
    }
}

// CaseA of the 2-tree forest construction: everything incident to u_1 on
// page 1, the rest (spokes at u_2) on page 2.
void forest2_case_a(const Peeler& p, const std::vector<bool>& alive,
                    const std::vector<int>& S, BookEmbedding& emb) {
    std::vector<bool> in_S(p.g.vertex_count, false);
    for (int w : S) in_S[w] = true;
    std::vector<int> clique;
    for (int v = 0; v < p.g.vertex_count; ++v)
        if (alive[v] && !in_S[v]) clique.push_back(v);
    assert(clique.size() == 2);
    const int u1 = clique[0], u2 = clique[1];

    emb.order = {u1, u2};
    emb.order.insert(emb.order.end(), S.begin(), S.end());
    emb.page_of[make_edge(u1, u2)] = 1;
    for (int w : S) {
        emb.page_of[make_edge(w, u1)] = 1;
        emb.page_of[make_edge(w, u2)] = 2;
    }
}

void forest2_recurse(const Peeler& p, std::vector<bool>& alive, int nominee,
                     BookEmbedding& emb) {
    const int n_alive = count_alive(alive);
    assert(n_alive >= 3);

    if (n_alive == 3) {
        int w = nominee;
        if (w < 0)
            for (int v = 0; v < p.g.vertex_count && w < 0; ++v)
                if (alive[v]) w = v;
        forest2_case_a(p, alive, {w}, emb);
        return;
    }

    const SubPartition sp = partition_step(p, alive);
    if (sp.case_a) {
        forest2_case_a(p, alive, sp.S, emb);
        return;
    }

    const int v = sp.pivot;
    std::vector<bool> sub = alive;
    for (int w : sp.S) sub[w] = false;
    const int sub_nominee = (count_alive(sub) == 3) ? v : -1;
    forest2_recurse(p, sub, sub_nominee, emb);

    // Label v's two neighbours by their page; only two pages exist, and v is
    // colourful, so both appear.
    const auto nb_v = p.alive_neighbours(v, sub);
    assert(nb_v.size() == 2);
    int u[3] = {-1, -1, -1};
    for (int x : nb_v) u[emb.page_of.at(make_edge(v, x))] = x;
    if (u[1] < 0 || u[2] < 0) throw std::logic_error("forest2_recurse: pivot not colourful");

    // First of u_1, u_2 reached walking clockwise from v.
    const int n = static_cast<int>(emb.order.size());
    int pos_v = -1;
    for (int i = 0; i < n; ++i)
        if (emb.order[i] == v) pos_v = i;
    int first = -1;
    for (int step = 1; step < n && first < 0; ++step) {
        const int x = emb.order[(pos_v + step) % n];
        if (x == u[1]) first = 1;
        if (x == u[2]) first = 2;
    }
    assert(first > 0);
    const int second = 3 - first;

    std::vector<int> s_first, s_second;
    for (int w : sp.S) {
        if (p.g.has_edge(w, u[first]))
            s_first.push_back(w);
        else
            s_second.push_back(w);
    }

    // S_first immediately clockwise after v, S_second immediately before.
    auto it = std::find(emb.order.begin(), emb.order.end(), v);
    it = emb.order.insert(std::next(it), s_first.begin(), s_first.end());
    it = std::find(emb.order.begin(), emb.order.end(), v);
    emb.order.insert(it, s_second.begin(), s_second.end());

    for (int w : s_first) {
        emb.page_of[make_edge(w, u[first])] = first;
        emb.page_of[make_edge(w, v)] = second;
    }
    for (int w : s_second) {
        emb.page_of[make_edge(w, u[second])] = second;
        emb.page_of[make_edge(w, v)] = first;
    }
}

int max_page(const BookEmbedding& emb) {
    int m = 0;
    for (const auto& [e, c] : emb.page_of) m = std::max(m, c);
    return m;
}

}  // namespace

BookEmbedding embed_star_forests(const KTreeBuild& b) {
    const Graph g = realize(b);
    Peeler p(g, b.k);
    std::vector<bool> alive(g.vertex_count, true);
    BookEmbedding emb;
    star_recurse(p, alive, -1, emb);
    emb.page_count = max_page(emb);
    assert(emb.page_count <= b.k + 1);
    return emb;
}

BookEmbedding embed_2tree_forests(const KTreeBuild& b) {
    if (b.k != 2) throw std::invalid_argument("embed_2tree_forests: build must have k = 2");
    const Graph g = realize(b);
    Peeler p(g, 2);
    std::vector<bool> alive(g.vertex_count, true);
    BookEmbedding emb;
    forest2_recurse(p, alive, -1, emb);
    emb.page_count = max_page(emb);
    assert(emb.page_count <= 2);
    return emb;
}

BookEmbedding zigzag_complete(int k) {
    if (k < 1) throw std::invalid_argument("zigzag_complete: need k >= 1");
    BookEmbedding emb;
    const int n = 2 * k;
    for (int v = 0; v < n; ++v) emb.order.push_back(v);
    for (int a = 1; a <= n; ++a)
        for (int bidx = a + 1; bidx <= n; ++bidx)
            emb.page_of[make_edge(a - 1, bidx - 1)] = 1 + ((a + bidx) % n) / 2;
    emb.page_count = k;
    return emb;
}

}  // namespace ktdraw
