// Shared helpers for the test binaries: deterministic generators, small
// structural checks, and witness revalidation done independently of the
// library's own validators.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "ktdraw/draw.hpp"
#include "ktdraw/graph.hpp"
#include "ktdraw/verify.hpp"

namespace testsupport {

using ktdraw::Drawing;
using ktdraw::Edge;
using ktdraw::EdgeColouring;
using ktdraw::Graph;
using ktdraw::MonoWitness;
using ktdraw::Point;
using ktdraw::Rat;

// Deterministic uniform draw; modulo rejection so results do not depend on
// the standard library's distribution implementation.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t m) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % m;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % m;
}

inline Graph complete_graph(int n) {
    Graph g;
    g.vertex_count = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g;
    g.vertex_count = n;
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

inline Graph star_graph(int leaves) {
    Graph g;
    g.vertex_count = leaves + 1;
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

// Random simple graph: every pair kept with probability 1/2.  When max_edges
// is set, a uniformly chosen subset of the kept pairs is dropped to fit.
inline Graph random_graph(int n, std::uint64_t seed, int max_edges = -1) {
    std::mt19937_64 rng(seed);
    std::vector<Edge> kept;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng() & 1) kept.push_back({u, v});
    if (max_edges >= 0) {
        while (static_cast<int>(kept.size()) > max_edges)
            kept.erase(kept.begin() +
                       static_cast<long>(uniform_below(rng, kept.size())));
    }
    Graph g;
    g.vertex_count = n;
    for (const Edge& e : kept) g.add_edge(e.first, e.second);
    return g;
}

inline EdgeColouring random_colouring(const Graph& g, int colours,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    EdgeColouring c;
    for (const Edge& e : g.edges)
        c[e] = 1 + static_cast<int>(uniform_below(rng, colours));
    return c;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

inline bool is_forest(const std::vector<Edge>& edges, int n) {
    Dsu dsu(n);
    for (const Edge& e : edges)
        if (!dsu.unite(e.first, e.second)) return false;
    return true;
}

// Star forest: acyclic and no component with two vertices of degree >= 2.
inline bool is_star_forest(const std::vector<Edge>& edges, int n) {
    if (!is_forest(edges, n)) return false;
    Dsu dsu(n);
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) {
        dsu.unite(e.first, e.second);
        ++deg[e.first];
        ++deg[e.second];
    }
    std::map<int, int> big;
    for (int v = 0; v < n; ++v)
        if (deg[v] >= 2 && ++big[dsu.find(v)] > 1) return false;
    return true;
}

inline std::vector<Edge> edges_of_colour(const EdgeColouring& colouring, int c) {
    std::vector<Edge> out;
    for (const auto& [e, ec] : colouring)
        if (ec == c) out.push_back(e);
    return out;
}

// K_4-minor test by series-parallel reduction: drop loops, merge parallel
// edges, delete degree <= 1 vertices and suppress degree-2 vertices.  The
// graph reduces to nothing exactly when it has no K_4 minor.
inline bool has_k4_minor(const std::vector<Edge>& edges, int n) {
    std::vector<std::map<int, int>> adj(n);  // neighbour -> multiplicity
    for (const Edge& e : edges) {
        if (e.first == e.second) continue;
        adj[e.first][e.second] = 1;
        adj[e.second][e.first] = 1;
    }
    auto degree = [&](int v) {
        int d = 0;
        for (const auto& [u, m] : adj[v]) d += m;
        return d;
    };
    auto drop_edge = [&](int u, int v) {
        adj[u].erase(v);
        adj[v].erase(u);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            for (auto it = adj[v].begin(); it != adj[v].end();) {
                if (it->second > 1) {
                    it->second = 1;
                    adj[it->first][v] = 1;
                    changed = true;
                }
                ++it;
            }
            const int d = degree(v);
            if (d == 1) {
                drop_edge(v, adj[v].begin()->first);
                changed = true;
            } else if (d == 2) {
                const int a = adj[v].begin()->first;
                const int b = std::next(adj[v].begin())->first;
                drop_edge(v, a);
                drop_edge(v, b);
                if (a != b) {
                    ++adj[a][b];
                    ++adj[b][a];
                }
                changed = true;
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!adj[v].empty()) return true;
    return false;
}

// Structural revalidation of a refuter witness, written from scratch so the
// refuters' own revalidation is not the only line of defence.
inline bool witness_valid(const Graph& host, const EdgeColouring& colouring,
                          const MonoWitness& w) {
    const std::set<int> distinct(w.vertices.begin(), w.vertices.end());
    if (distinct.size() != w.vertices.size()) return false;
    for (int v : w.vertices)
        if (v < 0 || v >= host.vertex_count) return false;
    auto mono_edge = [&](int u, int v) {
        const Edge e = ktdraw::make_edge(u, v);
        if (!host.edges.count(e)) return false;
        const auto it = colouring.find(e);
        return it != colouring.end() && it->second == w.colour;
    };
    switch (w.kind) {
        case MonoWitness::Kind::K33: {
            if (w.vertices.size() != 6) return false;
            for (int i = 0; i < 3; ++i)
                for (int j = 3; j < 6; ++j)
                    if (!mono_edge(w.vertices[i], w.vertices[j])) return false;
            return true;
        }
        case MonoWitness::Kind::K23: {
            if (w.vertices.size() != 5) return false;
            for (int i = 0; i < 2; ++i)
                for (int j = 2; j < 5; ++j)
                    if (!mono_edge(w.vertices[i], w.vertices[j])) return false;
            return true;
        }
        case MonoWitness::Kind::P4: {
            if (w.vertices.size() != 4) return false;
            for (int i = 0; i + 1 < 4; ++i)
                if (!mono_edge(w.vertices[i], w.vertices[i + 1])) return false;
            return true;
        }
        case MonoWitness::Kind::C4: {
            if (w.vertices.size() != 4) return false;
            for (int i = 0; i < 4; ++i)
                if (!mono_edge(w.vertices[i], w.vertices[(i + 1) % 4])) return false;
            return true;
        }
    }
    return false;
}

// A random rational displacement of length < radius: both coordinates are
// uniform multiples of radius/2^11 in (-radius/2, radius/2).
inline Point random_displacement(const Rat& radius, std::mt19937_64& rng) {
    const Rat step = radius / 2048;
    const long dx = static_cast<long>(uniform_below(rng, 2047)) - 1023;
    const long dy = static_cast<long>(uniform_below(rng, 2047)) - 1023;
    return {dx * step, dy * step};
}

inline std::vector<std::vector<int>> collinear_triples(const Drawing& d) {
    std::vector<std::pair<int, Point>> pts(d.pos.begin(), d.pos.end());
    std::vector<std::vector<int>> out;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l)
                if (ktdraw::collinear(pts[i].second, pts[j].second, pts[l].second))
                    out.push_back({pts[i].first, pts[j].first, pts[l].first});
    return out;
}

// True when the drawing has no crossing at all, colours ignored.
inline bool drawing_noncrossing(const Drawing& d) {
    std::vector<Edge> edges;
    for (const auto& [e, c] : d.colour_of) edges.push_back(e);
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j)
            if (ktdraw::segments_cross(d.pos.at(edges[i].first), d.pos.at(edges[i].second),
                                       d.pos.at(edges[j].first), d.pos.at(edges[j].second)))
                return false;
    return true;
}

}  // namespace testsupport
