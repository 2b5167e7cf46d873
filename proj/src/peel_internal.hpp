// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "ktdraw/graph.hpp"

// Shared recursion state of the book and drawing constructions: the fixed
// host k-tree plus a shrinking alive vertex set.  Not part of the public API.
namespace ktdraw::detail {

struct Peeler {
    const Graph& g;
    int k;
    std::vector<std::set<int>> adj;

    explicit Peeler(const Graph& host, int param) : g(host), k(param) {
        adj.resize(g.vertex_count);
        for (const Edge& e : g.edges) {
            adj[e.first].insert(e.second);
            adj[e.second].insert(e.first);
        }
    }

    std::vector<int> alive_neighbours(int v, const std::vector<bool>& alive) const {
        std::vector<int> out;
        for (int u : adj[v])
            if (alive[u]) out.push_back(u);
        return out;
    }

    // k-simplicial vertices of the subgraph induced by the alive set.
    std::vector<int> simplicial(const std::vector<bool>& alive) const {
        std::vector<int> out;
        for (int v = 0; v < g.vertex_count; ++v) {
            if (!alive[v]) continue;
            const auto nb = alive_neighbours(v, alive);
            if (static_cast<int>(nb.size()) != k) continue;
            if (is_clique(g, nb)) out.push_back(v);
        }
        return out;
    }
};

struct SubPartition {
    bool case_a = false;
    std::vector<int> S;
    int pivot = -1;
};

// The partition lemma applied to the alive-induced sub-k-tree with at least
// k+2 vertices.
inline SubPartition partition_step(const Peeler& p, const std::vector<bool>& alive) {
    SubPartition sp;
    const std::vector<int> L = p.simplicial(alive);
    if (L.empty()) throw std::logic_error("partition_step: no simplicial vertices");
    std::vector<bool> rest = alive;
    int rest_count = 0;
    for (int v : L) rest[v] = false;
    for (int v = 0; v < p.g.vertex_count; ++v)
        if (rest[v]) ++rest_count;
    if (rest_count == p.k) {
        sp.case_a = true;
        sp.S = L;
        return sp;
    }
    for (int v = 0; v < p.g.vertex_count; ++v) {
        if (!rest[v]) continue;
        const auto nb = p.alive_neighbours(v, rest);
        if (static_cast<int>(nb.size()) != p.k || !is_clique(p.g, nb)) continue;
        sp.pivot = v;
        break;
    }
    if (sp.pivot < 0) throw std::logic_error("partition_step: no pivot in G\\L");
    for (int u : p.alive_neighbours(sp.pivot, alive)) {
        if (std::find(L.begin(), L.end(), u) != L.end()) sp.S.push_back(u);
    }
    if (sp.S.empty()) throw std::logic_error("partition_step: empty S");
    return sp;
}

inline int count_alive(const std::vector<bool>& alive) {
    return static_cast<int>(std::count(alive.begin(), alive.end(), true));
}

}  // namespace ktdraw::detail
