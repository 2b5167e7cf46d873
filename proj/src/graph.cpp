// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#include "ktdraw/graph.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace ktdraw {

Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge");
    return u < v ? Edge{u, v} : Edge{v, u};
}

void Graph::add_edge(int u, int v) {
    const Edge e = make_edge(u, v);
    if (e.first < 0 || e.second >= vertex_count)
        throw std::invalid_argument("edge endpoint out of range");
    edges.insert(e);
}

std::vector<std::vector<int>> adjacency(const Graph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count);
    for (const Edge& e : g.edges) {
        adj[e.first].push_back(e.second);
        adj[e.second].push_back(e.first);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

bool is_clique(const Graph& g, const std::vector<int>& verts) {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (!g.has_edge(verts[i], verts[j])) return false;
    return true;
}

std::vector<int> simplicial_vertices(const Graph& g, int k) {
    std::vector<int> out;
    const auto adj = adjacency(g);
    for (int v = 0; v < g.vertex_count; ++v) {
        if (static_cast<int>(adj[v].size()) != k) continue;
        if (is_clique(g, adj[v])) out.push_back(v);
    }
    return out;
}

Graph realize(const KTreeBuild& b) {
    if (b.k < 1) throw std::invalid_argument("build: k must be positive");
    if (static_cast<int>(b.base.size()) != b.k + 1)
        throw std::invalid_argument("build: base must have k+1 vertices");
    const int n = b.vertex_count();

    std::vector<bool> seen(n, false);
    auto mark = [&](int v) {
        if (v < 0 || v >= n) throw std::invalid_argument("build: vertex id out of range");
        if (seen[v]) throw std::invalid_argument("build: duplicate vertex id");
        seen[v] = true;
    };
    for (int v : b.base) mark(v);

    Graph g;
    g.vertex_count = n;
    for (size_t i = 0; i < b.base.size(); ++i)
        for (size_t j = i + 1; j < b.base.size(); ++j)
            g.add_edge(b.base[i], b.base[j]);

    for (const Addition& a : b.additions) {
        if (static_cast<int>(a.clique.size()) != b.k)
            throw std::invalid_argument("build: addition clique must have k vertices");
        for (int c : a.clique) {
            if (c < 0 || c >= n || !seen[c])
                throw std::invalid_argument("build: addition clique vertex not present");
            if (c == a.v) throw std::invalid_argument("build: addition clique contains the new vertex");
        }
        if (!is_clique(g, a.clique))
            throw std::invalid_argument("build: addition onto a non-clique");
        mark(a.v);
        for (int c : a.clique) g.add_edge(a.v, c);
    }
    return g;
}

KTreeBuild ktree_certify(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("ktree_certify: k must be positive");
    const int n = g.vertex_count;
    if (n < k + 1) throw NotAKTree("fewer than k+1 vertices");

    const long expected = static_cast<long>(k) * n - static_cast<long>(k) * (k + 1) / 2;
    if (static_cast<long>(g.edges.size()) != expected) throw NotAKTree("wrong edge count");

    std::vector<std::set<int>> adj(n);
    for (const Edge& e : g.edges) {
        adj[e.first].insert(e.second);
        adj[e.second].insert(e.first);
    }
    std::vector<bool> alive(n, true);
    int alive_count = n;

    auto alive_clique = [&](const std::set<int>& verts) {
        for (auto i = verts.begin(); i != verts.end(); ++i)
            for (auto j = std::next(i); j != verts.end(); ++j)
                if (!g.has_edge(*i, *j)) return false;
        return true;
    };

    std::vector<Addition> peeled;
    while (alive_count > k + 1) {
        int found = -1;
        for (int v = 0; v < n && found < 0; ++v) {
            if (!alive[v]) continue;
            if (static_cast<int>(adj[v].size()) != k) continue;
            if (alive_clique(adj[v])) found = v;
        }
        if (found < 0) throw NotAKTree("no simplicial vertex found");
        Addition a;
        a.v = found;
        a.clique.assign(adj[found].begin(), adj[found].end());
        peeled.push_back(a);
        for (int u : adj[found]) adj[u].erase(found);
        adj[found].clear();
        alive[found] = false;
        --alive_count;
    }

    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (alive[v]) rest.push_back(v);
    for (size_t i = 0; i < rest.size(); ++i)
        for (size_t j = i + 1; j < rest.size(); ++j)
            if (!g.has_edge(rest[i], rest[j])) throw NotAKTree("base not K_{k+1}");

    KTreeBuild b;
    b.k = k;
    b.base = rest;
    b.additions.assign(peeled.rbegin(), peeled.rend());
    return b;
}

namespace {

// Unbiased uniform draw from [0, m); plain modulo would skew and
// uniform_int_distribution is not bit-identical across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % m;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % m;
}

}  // namespace

KTreeBuild random_ktree(int k, int n, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("random_ktree: k must be positive");
    if (n < k + 1) throw std::invalid_argument("random_ktree: need n >= k+1");

    KTreeBuild b;
    b.k = k;
    for (int v = 0; v <= k; ++v) b.base.push_back(v);

    // Tracked k-cliques; the base contributes its k+1 subsets of size k.
    std::vector<std::vector<int>> cliques;
    for (int skip = 0; skip <= k; ++skip) {
        std::vector<int> c;
        for (int v = 0; v <= k; ++v)
            if (v != skip) c.push_back(v);
        cliques.push_back(c);
    }

    std::mt19937_64 rng(seed);
    for (int v = k + 1; v < n; ++v) {
        const auto pick = cliques[uniform_below(rng, cliques.size())];
        Addition a;
        a.v = v;
        a.clique = pick;
        b.additions.push_back(a);
        for (size_t skip = 0; skip < pick.size(); ++skip) {
            std::vector<int> c;
            for (size_t j = 0; j < pick.size(); ++j)
                if (j != skip) c.push_back(pick[j]);
            c.push_back(v);
            std::sort(c.begin(), c.end());
            cliques.push_back(c);
        }
    }
    return b;
}

PartitionCase lemma_partition(const KTreeBuild& b) {
    const Graph g = realize(b);
    const int k = b.k;
    const int n = g.vertex_count;
    PartitionCase pc;

    if (n == k + 1) {
        pc.kind = PartitionCase::Kind::A;
        pc.S = {0};
        return pc;
    }

    const std::vector<int> L = simplicial_vertices(g, k);
    std::vector<bool> in_L(n, false);
    for (int v : L) in_L[v] = true;

    if (n - static_cast<int>(L.size()) == k) {
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!in_L[v]) rest.push_back(v);
        if (!is_clique(g, rest)) throw std::logic_error("lemma_partition: G\\L not complete");
        pc.kind = PartitionCase::Kind::A;
        pc.S = L;
        return pc;
    }

    // G\L is a k-tree; find its lowest k-simplicial vertex.
    Graph h;
    std::vector<int> to_h(n, -1), from_h;
    for (int v = 0; v < n; ++v) {
        if (in_L[v]) continue;
        to_h[v] = static_cast<int>(from_h.size());
        from_h.push_back(v);
    }
    h.vertex_count = static_cast<int>(from_h.size());
    for (const Edge& e : g.edges)
        if (!in_L[e.first] && !in_L[e.second]) h.add_edge(to_h[e.first], to_h[e.second]);

    const std::vector<int> hs = simplicial_vertices(h, k);
    if (hs.empty()) throw std::logic_error("lemma_partition: no simplicial vertex in G\\L");
    const int v = from_h[hs.front()];

    pc.kind = PartitionCase::Kind::B;
    pc.pivot_v = v;
    const auto adj = adjacency(g);
    for (int u : adj[v])
        if (in_L[u]) pc.S.push_back(u);
    if (pc.S.empty()) throw std::logic_error("lemma_partition: empty S in CaseB");
    return pc;
}

KTreeBuild complete_split(int k, int s) {
    if (k < 1 || s < 1) throw std::invalid_argument("complete_split: need k,s >= 1");
    KTreeBuild b;
    b.k = k;
    for (int v = 0; v <= k; ++v) b.base.push_back(v);
    std::vector<int> clique;
    for (int v = 0; v < k; ++v) clique.push_back(v);
    for (int j = 1; j < s; ++j) {
        Addition a;
        a.v = k + j;
        a.clique = clique;
        b.additions.push_back(a);
    }
    return b;
}

KTreeBuild qk_graph(int k) {
    if (k < 3) throw std::invalid_argument("qk_graph: need k >= 3");
    const int s = 2 * k * k + 1;
    KTreeBuild b = complete_split(k, s);
    int next = k + s;
    for (int j = 0; j < s; ++j) {
        const int v = k + j;
        for (int i = 1; i <= 3; ++i) {
            std::vector<int> clique;
            for (int c = 0; c < k; ++c)
                if (c != i - 1) clique.push_back(c);
            clique.push_back(v);
            for (int rep = 0; rep < 4; ++rep) {
                Addition a;
                a.v = next++;
                a.clique = clique;
                b.additions.push_back(a);
            }
        }
    }
    return b;
}

StarLbGadget star_lb_graph(int k) {
    if (k < 1) throw std::invalid_argument("star_lb_graph: need k >= 1");
    long s = 1;
    for (int i = 0; i < k; ++i) s *= k;
    s += 1;

    StarLbGadget gadget;
    const Graph core = realize(complete_split(k, static_cast<int>(s)));
    gadget.graph.vertex_count = core.vertex_count + static_cast<int>(s);
    gadget.graph.edges = core.edges;
    for (int v = 0; v < k; ++v) gadget.clique.push_back(v);
    for (int j = 0; j < s; ++j) {
        const int sv = k + j;
        const int pv = core.vertex_count + j;
        gadget.s_vertices.push_back(sv);
        gadget.pendants.push_back(pv);
        gadget.graph.add_edge(sv, pv);
    }
    return gadget;
}

KTreeBuild ktree_lift(const KTreeBuild& b) {
    const Graph g = realize(b);  // validates
    const int n = g.vertex_count;
    const int aux = n;

    KTreeBuild lifted;
    lifted.k = b.k + 1;
    lifted.base = b.base;
    lifted.base.push_back(aux);
    std::sort(lifted.base.begin(), lifted.base.end());

    Graph cur;
    cur.vertex_count = n + 1;
    for (size_t i = 0; i < lifted.base.size(); ++i)
        for (size_t j = i + 1; j < lifted.base.size(); ++j)
            cur.add_edge(lifted.base[i], lifted.base[j]);

    for (const Addition& a : b.additions) {
        int p = -1;
        for (int cand = 0; cand <= n && p < 0; ++cand) {
            if (std::find(a.clique.begin(), a.clique.end(), cand) != a.clique.end()) continue;
            bool all = true;
            for (int c : a.clique)
                if (!cur.has_edge(cand, c)) {
                    all = false;
                    break;
                }
            if (all) p = cand;
        }
        if (p < 0) throw std::logic_error("ktree_lift: no common neighbour for clique");
        Addition la;
        la.v = a.v;
        la.clique = a.clique;
        la.clique.push_back(p);
        std::sort(la.clique.begin(), la.clique.end());
        lifted.additions.push_back(la);
        for (int c : la.clique) cur.add_edge(la.v, c);
    }
    return lifted;
}

}  // namespace ktdraw
