// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#include "ktdraw/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace ktdraw {

namespace {

std::vector<Edge> edge_list(const Graph& g) {
    return std::vector<Edge>(g.edges.begin(), g.edges.end());
}

// Adjacency-bitmask view of an edge subset; vertex ids below 32.
struct TinyGraph {
    int n = 0;
    std::vector<unsigned> adj;
    unsigned support = 0;

    int degree(int v) const { return __builtin_popcount(adj[v]); }
    int support_size() const { return __builtin_popcount(support); }
};

TinyGraph materialize(int n, const std::vector<Edge>& edges, std::uint64_t mask) {
    TinyGraph t;
    t.n = n;
    t.adj.assign(n, 0u);
    for (size_t i = 0; i < edges.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        t.adj[edges[i].first] |= 1u << edges[i].second;
        t.adj[edges[i].second] |= 1u << edges[i].first;
        t.support |= (1u << edges[i].first) | (1u << edges[i].second);
    }
    return t;
}

// Packs internally-disjoint paths between the requested terminal pairs,
// avoiding `banned` as internal vertices. A pair flagged need_internal may
// not be realized by a single edge.
struct PathPacker {
    const TinyGraph& g;
    unsigned banned;
    std::vector<std::tuple<int, int, bool>> pairs;
    // how many internal vertices all remaining paths may consume in total;
    // at most support - |branch set|, which caps path lengths hard
    int budget = 0;

    bool pack(size_t idx, unsigned used, int left) const {
        if (idx == pairs.size()) return true;
        const auto& [a, b, need] = pairs[idx];
        return walk(a, a, b, need, idx, used, 0u, left);
    }

    bool walk(int cur, int a, int b, bool need, size_t idx, unsigned used,
              unsigned internals, int left) const {
        if (g.adj[cur] >> b & 1) {  // finishing directly is the cheapest option
            if (!(need && cur == a) && pack(idx + 1, used | internals, left))
                return true;
        }
        if (left == 0) return false;
        for (unsigned rest = g.adj[cur] & ~banned & ~used & ~internals &
                             ~(1u << a) & ~(1u << b);
             rest; rest &= rest - 1) {
            const int w = __builtin_ctz(rest);
            if (walk(w, a, b, need, idx, used, internals | (1u << w), left - 1))
                return true;
        }
        return false;
    }
};

void for_each_subset(const std::vector<int>& items, int r,
                     const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> pick;
    // returns true from fn to stop early
    std::function<bool(size_t)> rec = [&](size_t from) {
        if (static_cast<int>(pick.size()) == r) return fn(pick);
        if (items.size() + pick.size() < from + static_cast<size_t>(r)) return false;
        for (size_t i = from; i < items.size(); ++i) {
            pick.push_back(items[i]);
            if (rec(i + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    rec(0);
}

// Loads pp with the branch pairs of one candidate set, edge-missing pairs
// first since each of those eats at least one internal vertex; returns false
// when more such pairs exist than the internal-vertex budget allows.
bool load_pairs(PathPacker& pp, const TinyGraph& t, const int* as, int na,
                const int* bs, int nb) {
    pp.pairs.clear();
    int hard = 0;
    for (int x = 0; x < na; ++x) {
        const int lo = bs == as ? x + 1 : 0;
        for (int y = lo; y < nb; ++y)
            if (!(t.adj[as[x]] >> bs[y] & 1)) {
                pp.pairs.push_back({as[x], bs[y], false});
                ++hard;
            }
    }
    if (hard > pp.budget) return false;
    for (int x = 0; x < na; ++x) {
        const int lo = bs == as ? x + 1 : 0;
        for (int y = lo; y < nb; ++y)
            if (t.adj[as[x]] >> bs[y] & 1) pp.pairs.push_back({as[x], bs[y], false});
    }
    return true;
}

bool has_k5_subdivision(const TinyGraph& t) {
    int cand[32];
    int nc = 0;
    for (int v = 0; v < t.n; ++v)
        if (t.degree(v) >= 4) cand[nc++] = v;
    if (nc < 5) return false;
    PathPacker pp{t, 0u, {}, 0};
    pp.pairs.reserve(10);
    for (int i1 = 0; i1 < nc; ++i1)
        for (int i2 = i1 + 1; i2 < nc; ++i2)
            for (int i3 = i2 + 1; i3 < nc; ++i3)
                for (int i4 = i3 + 1; i4 < nc; ++i4)
                    for (int i5 = i4 + 1; i5 < nc; ++i5) {
                        const int B[5] = {cand[i1], cand[i2], cand[i3], cand[i4],
                                          cand[i5]};
                        pp.banned = 0;
                        for (int v : B) pp.banned |= 1u << v;
                        pp.budget = t.support_size() - 5;
                        if (!load_pairs(pp, t, B, 5, B, 5)) continue;
                        if (pp.pack(0, 0u, pp.budget)) return true;
                    }
    return false;
}

bool has_k33_subdivision(const TinyGraph& t) {
    int cand[32];
    int nc = 0;
    for (int v = 0; v < t.n; ++v)
        if (t.degree(v) >= 3) cand[nc++] = v;
    if (nc < 6) return false;
    PathPacker pp{t, 0u, {}, 0};
    pp.pairs.reserve(9);
    for (int i1 = 0; i1 < nc; ++i1)
        for (int i2 = i1 + 1; i2 < nc; ++i2)
            for (int i3 = i2 + 1; i3 < nc; ++i3)
                for (int i4 = i3 + 1; i4 < nc; ++i4)
                    for (int i5 = i4 + 1; i5 < nc; ++i5)
                        for (int i6 = i5 + 1; i6 < nc; ++i6) {
                            const int B[6] = {cand[i1], cand[i2], cand[i3],
                                              cand[i4], cand[i5], cand[i6]};
                            // B[0] stays on side A, killing the side swap
                            for (int p = 1; p < 5; ++p)
                                for (int q = p + 1; q < 6; ++q) {
                                    int sideA[3] = {B[0], B[p], B[q]};
                                    int sideB[3];
                                    int k = 0;
                                    for (int r = 1; r < 6; ++r)
                                        if (r != p && r != q) sideB[k++] = B[r];
                                    pp.banned = 0;
                                    for (int v : B) pp.banned |= 1u << v;
                                    pp.budget = t.support_size() - 6;
                                    if (!load_pairs(pp, t, sideA, 3, sideB, 3))
                                        continue;
                                    if (pp.pack(0, 0u, pp.budget)) return true;
                                }
                        }
    return false;
}

bool has_k4_subdivision(const TinyGraph& t) {
    std::vector<int> cand;
    for (int v = 0; v < t.n; ++v)
        if (t.degree(v) >= 3) cand.push_back(v);
    if (static_cast<int>(cand.size()) < 4) return false;
    bool found = false;
    for_each_subset(cand, 4, [&](const std::vector<int>& B) {
        unsigned banned = 0;
        for (int v : B) banned |= 1u << v;
        PathPacker pp{t, banned, {}, t.support_size() - 4};
        for (size_t i = 0; i < B.size(); ++i)
            for (size_t j = i + 1; j < B.size(); ++j)
                pp.pairs.push_back({B[i], B[j], false});
        if (pp.pack(0, 0u, pp.budget)) found = true;
        return found;
    });
    return found;
}

bool has_k23_subdivision(const TinyGraph& t) {
    // two centres joined by three internally-disjoint paths, each with at
    // least one internal vertex
    for (int x = 0; x < t.n; ++x) {
        if (t.degree(x) < 3) continue;
        for (int y = x + 1; y < t.n; ++y) {
            if (t.degree(y) < 3) continue;
            PathPacker pp{t,
                          (1u << x) | (1u << y),
                          {{x, y, true}, {x, y, true}, {x, y, true}},
                          t.support_size() - 2};
            if (pp.pack(0, 0u, pp.budget)) return true;
        }
    }
    return false;
}

// Suppress degree-2 vertices and drop degree-<=1 vertices; preserves the
// existence of K_5/K_{3,3} subdivisions (topological reduction).
TinyGraph reduce_topologically(TinyGraph t) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < t.n; ++v) {
            const int d = t.degree(v);
            if (d == 0) continue;
            if (d == 1) {
                const int u = __builtin_ctz(t.adj[v]);
                t.adj[v] = 0;
                t.adj[u] &= ~(1u << v);
                changed = true;
            } else if (d == 2) {
                const int a = __builtin_ctz(t.adj[v]);
                const int b = __builtin_ctz(t.adj[v] & ~(1u << a));
                t.adj[v] = 0;
                t.adj[a] &= ~(1u << v);
                t.adj[b] &= ~(1u << v);
                t.adj[a] |= 1u << b;
                t.adj[b] |= 1u << a;
                changed = true;
            }
        }
    }
    t.support = 0;
    for (int v = 0; v < t.n; ++v)
        if (t.adj[v]) t.support |= 1u << v;
    return t;
}

int edge_count(const TinyGraph& t) {
    int s = 0;
    for (int v = 0; v < t.n; ++v) s += t.degree(v);
    return s / 2;
}

int component_count(const TinyGraph& t) {
    unsigned left = t.support;
    int c = 0;
    while (left) {
        unsigned comp = left & -left;
        for (unsigned grow = comp;;) {
            for (unsigned bits = comp; bits; bits &= bits - 1)
                grow |= t.adj[__builtin_ctz(bits)];
            grow &= t.support;
            if (grow == comp) break;
            comp = grow;
        }
        left &= ~comp;
        ++c;
    }
    return c;
}

// Cycle rank m - n + c of a subgraph never exceeds the host's, and the ranks
// of K_5 and K_{3,3} are 6 and 4, of K_4 and K_{2,3} are 3 and 2. Low-rank
// hosts therefore cannot contain the respective subdivisions.
int cycle_rank(const TinyGraph& t) {
    return edge_count(t) - t.support_size() + component_count(t);
}

// Memoized exact tests on edge subsets of one host graph. K_5/K_{3,3}
// subdivisions decide planarity (Kuratowski); K_4/K_{2,3} decide
// outerplanarity (both have maximum degree 3, so subdivision = minor).
struct SubgraphTests {
    int n;
    std::vector<Edge> edges;
    std::unordered_map<std::uint64_t, bool> planar_memo, outer_memo;
    // edge-index masks of every complete K_5 / K_{3,3} subgraph of the host,
    // a cheap reject prepass ahead of the subdivision search
    std::vector<std::uint64_t> k5_masks, k33_masks;

    SubgraphTests(int n_, std::vector<Edge> edges_) : n(n_), edges(std::move(edges_)) {
        build_prepass();
    }

    void build_prepass() {
        std::map<Edge, int> index;
        for (size_t i = 0; i < edges.size(); ++i) index[edges[i]] = static_cast<int>(i);
        auto mask_of = [&](const std::vector<Edge>& want) -> std::uint64_t {
            std::uint64_t m = 0;
            for (const Edge& e : want) {
                auto it = index.find(e);
                if (it == index.end()) return 0;  // not a subgraph of the host
                m |= 1ull << it->second;
            }
            return m;
        };
        std::vector<int> verts(n);
        for (int v = 0; v < n; ++v) verts[v] = v;
        for_each_subset(verts, 5, [&](const std::vector<int>& B) {
            std::vector<Edge> want;
            for (size_t i = 0; i < B.size(); ++i)
                for (size_t j = i + 1; j < B.size(); ++j)
                    want.push_back(make_edge(B[i], B[j]));
            if (const std::uint64_t m = mask_of(want)) k5_masks.push_back(m);
            return false;
        });
        for_each_subset(verts, 6, [&](const std::vector<int>& B) {
            std::vector<int> rest(B.begin() + 1, B.end());
            for_each_subset(rest, 2, [&](const std::vector<int>& tail) {
                std::vector<Edge> want;
                for (int v : rest)
                    if (v != tail[0] && v != tail[1]) {
                        want.push_back(make_edge(B[0], v));
                        want.push_back(make_edge(tail[0], v));
                        want.push_back(make_edge(tail[1], v));
                    }
                if (const std::uint64_t m = mask_of(want)) k33_masks.push_back(m);
                return false;
            });
            return false;
        });
    }

    bool planar(std::uint64_t mask) {
        const int m = __builtin_popcountll(mask);
        if (m <= 8) return true;
        for (const std::uint64_t bad : k5_masks)
            if ((mask & bad) == bad) return false;
        for (const std::uint64_t bad : k33_masks)
            if ((mask & bad) == bad) return false;
        auto it = planar_memo.find(mask);
        if (it != planar_memo.end()) return it->second;
        TinyGraph t = materialize(n, edges, mask);
        bool ok = true;
        if (t.support_size() >= 3 && m > 3 * t.support_size() - 6) {
            ok = false;
        } else if (cycle_rank(t) <= 3) {
            ok = true;
        } else {
            t = reduce_topologically(t);
            const int mr = edge_count(t);
            if (mr <= 8)
                ok = true;
            else if (t.support_size() >= 3 && mr > 3 * t.support_size() - 6)
                ok = false;
            else
                ok = !has_k5_subdivision(t) && !has_k33_subdivision(t);
        }
        planar_memo[mask] = ok;
        return ok;
    }

    bool outerplanar(std::uint64_t mask) {
        const int m = __builtin_popcountll(mask);
        if (m <= 5) return true;
        auto it = outer_memo.find(mask);
        if (it != outer_memo.end()) return it->second;
        const TinyGraph t = materialize(n, edges, mask);
        bool ok = true;
        if (t.support_size() >= 2 && m > 2 * t.support_size() - 3)
            ok = false;
        else if (cycle_rank(t) <= 1)
            ok = true;
        else
            ok = !has_k4_subdivision(t) && !has_k23_subdivision(t);
        outer_memo[mask] = ok;
        return ok;
    }
};

// Smallest t such that the edges split into t parts all satisfying part_ok;
// parts are capped at cap edges each. Deterministic: edges ascending, parts
// ascending, first part forced for the first edge.
template <typename PartOk>
OracleResult partition_search(const Graph& g, int cap, PartOk&& part_ok,
                              const std::string& method, int lower) {
    const std::vector<Edge> edges = edge_list(g);
    const int m = static_cast<int>(edges.size());
    const int n = g.vertex_count;
    // On complete hosts every relabelling of vertices 1..n-1 is an
    // automorphism. Take the lexicographically least assign string in each
    // orbit (under relabellings and first-use part renumbering): whenever
    // labels u, u+1 carry equal parts on all stars before star a, swapping
    // them only exchanges the edges (a,u) <-> (a,u+1) among the assigned
    // prefix, so minimality forces part(a,u) <= part(a,u+1). Enforcing that
    // during the search is therefore a sound quotient.
    const bool complete = m == n * (n - 1) / 2;
    std::vector<int> row_off(std::max(n, 1), 0);
    for (int i = 1; i < n; ++i) row_off[i] = row_off[i - 1] + (n - i);
    auto eidx = [&](int i, int u) { return row_off[i] + u - i - 1; };
    OracleResult res;
    res.method = method;
    if (complete) res.method += "; star-sorted symmetry quotient (complete input)";
    if (m == 0) {
        res.value = 0;
        return res;
    }
    for (int t = std::max(lower, 1);; ++t) {
        std::vector<std::uint64_t> parts(t, 0);
        std::vector<int> sizes(t, 0);
        std::vector<int> assign(m, 0);
        std::function<bool(int, int)> dfs = [&](int idx, int used) {
            ++res.states_explored;
            if (idx == m) return true;
            const int rem = m - idx;
            int free_cap = (t - used) * cap;
            for (int p = 0; p < used; ++p) free_cap += cap - sizes[p];
            if (rem > free_cap) {
                ++res.states_pruned;
                return false;
            }
            int min_p = 0;
            if (complete) {
                const int a = edges[idx].first;
                const int b = edges[idx].second;
                if (b > a + 1) {
                    bool tied = true;
                    for (int i = 0; i < a && tied; ++i)
                        tied = assign[eidx(i, b - 1)] == assign[eidx(i, b)];
                    if (tied) min_p = assign[idx - 1];
                }
            }
            const int maxp = std::min(t, used + 1);
            for (int p = min_p; p < maxp; ++p) {
                if (sizes[p] >= cap) continue;
                const std::uint64_t next = parts[p] | (1ull << idx);
                if (!part_ok(next)) {
                    ++res.states_pruned;
                    continue;
                }
                parts[p] = next;
                ++sizes[p];
                assign[idx] = p;
                if (dfs(idx + 1, std::max(used, p + 1))) return true;
                parts[p] &= ~(1ull << idx);
                --sizes[p];
            }
            return false;
        };
        if (dfs(0, 0)) {
            res.value = t;
            for (int i = 0; i < m; ++i) res.classes[edges[i]] = assign[i] + 1;
            return res;
        }
    }
}

int euler_lower_bound(const Graph& g, int per_vertex_cap_num, int offset) {
    // parts hold at most per_vertex_cap_num * n - offset edges
    const int m = static_cast<int>(g.edges.size());
    if (m == 0) return 0;
    const int cap = per_vertex_cap_num * g.vertex_count - offset;
    if (cap <= 0) return 1;
    return (m + cap - 1) / cap;
}

// ---- book thickness ----------------------------------------------------

OracleResult book_thickness_impl(const Graph& g) {
    const std::vector<Edge> edges = edge_list(g);
    const int n = g.vertex_count;
    const int m = static_cast<int>(edges.size());
    OracleResult res;
    res.method =
        "cyclic orders with vertex 0 fixed and reflections quotiented; "
        "pages = branch-and-bound colouring of the crossing-conflict graph";
    for (int v = 0; v < n; ++v) res.order.push_back(v);
    if (m == 0) {
        res.value = 0;
        return res;
    }

    int best = m + 1;
    std::vector<int> best_order, best_assign;
    std::vector<int> perm;
    for (int v = 1; v < n; ++v) perm.push_back(v);
    std::vector<int> pos(n, 0);
    std::vector<std::uint64_t> conf(m, 0);

    do {
        if (n >= 3 && perm.front() > perm.back()) continue;  // reflection
        pos[0] = 0;
        for (int i = 0; i < n - 1; ++i) pos[perm[i]] = i + 1;
        for (int i = 0; i < m; ++i) conf[i] = 0;
        for (int i = 0; i < m; ++i) {
            int a1 = pos[edges[i].first], b1 = pos[edges[i].second];
            if (a1 > b1) std::swap(a1, b1);
            for (int j = i + 1; j < m; ++j) {
                int a2 = pos[edges[j].first], b2 = pos[edges[j].second];
                if (a2 > b2) std::swap(a2, b2);
                const bool crossing = (a1 < a2 && a2 < b1 && b1 < b2) ||
                                      (a2 < a1 && a1 < b2 && b2 < b1);
                if (crossing) {
                    conf[i] |= 1ull << j;
                    conf[j] |= 1ull << i;
                }
            }
        }

        // greedy pairwise-crossing clique: a lower bound on the page count
        std::uint64_t clique = 0;
        int clique_size = 0;
        for (int i = 0; i < m; ++i)
            if ((conf[i] & clique) == clique) {
                clique |= 1ull << i;
                ++clique_size;
            }
        if (clique_size >= best) {
            ++res.states_pruned;
            continue;
        }

        std::vector<std::uint64_t> page_mask(m + 1, 0);
        std::vector<int> assign(m, 0);
        std::function<void(int, int)> dfs = [&](int idx, int used) {
            ++res.states_explored;
            if (used >= best) return;
            if (idx == m) {
                best = used;
                best_assign = assign;
                best_order.assign(1, 0);
                best_order.insert(best_order.end(), perm.begin(), perm.end());
                return;
            }
            const int maxc = std::min(used + 1, best - 1);
            for (int c = 1; c <= maxc; ++c) {
                if (page_mask[c] & conf[idx]) continue;
                page_mask[c] |= 1ull << idx;
                assign[idx] = c;
                dfs(idx + 1, std::max(used, c));
                page_mask[c] &= ~(1ull << idx);
            }
        };
        dfs(0, 0);
    } while (std::next_permutation(perm.begin(), perm.end()));

    res.value = best;
    res.order = best_order;
    for (int i = 0; i < m; ++i) res.classes[edges[i]] = best_assign[i];
    return res;
}

// ---- star arboricity ---------------------------------------------------

bool star_forest_ok(const std::vector<Edge>& members) {
    std::map<int, int> comp;
    std::map<int, int> deg;
    std::function<int(int)> find = [&](int v) {
        while (comp[v] != v) {
            comp[v] = comp[comp[v]];
            v = comp[v];
        }
        return v;
    };
    for (const Edge& e : members) {
        if (!comp.count(e.first)) comp[e.first] = e.first;
        if (!comp.count(e.second)) comp[e.second] = e.second;
        const int a = find(e.first), b = find(e.second);
        if (a == b) return false;  // cycle
        comp[a] = b;
        ++deg[e.first];
        ++deg[e.second];
    }
    std::map<int, int> branches;  // root -> vertices of degree >= 2
    for (const auto& [v, d] : deg)
        if (d >= 2 && ++branches[find(v)] > 1) return false;
    return true;
}

OracleResult star_arboricity_impl(const Graph& g) {
    const std::vector<Edge> edges = edge_list(g);
    const int m = static_cast<int>(edges.size());
    OracleResult res;
    res.method = "exhaustive colouring with star-forest pruning, colours ascending";
    if (m == 0) {
        res.value = 0;
        return res;
    }
    for (int c = 1;; ++c) {
        std::vector<std::vector<Edge>> classes(c + 1);
        std::vector<int> assign(m, 0);
        std::function<bool(int, int)> dfs = [&](int idx, int used) {
            ++res.states_explored;
            if (idx == m) return true;
            const int maxc = std::min(c, used + 1);
            for (int col = 1; col <= maxc; ++col) {
                classes[col].push_back(edges[idx]);
                if (star_forest_ok(classes[col])) {
                    assign[idx] = col;
                    if (dfs(idx + 1, std::max(used, col))) return true;
                } else {
                    ++res.states_pruned;
                }
                classes[col].pop_back();
            }
            return false;
        };
        if (dfs(0, 0)) {
            res.value = c;
            for (int i = 0; i < m; ++i) res.classes[edges[i]] = assign[i];
            return res;
        }
    }
}

// ---- outerthickness (internal, used by the inequality chain) -----------

OracleResult outerthickness_impl(const Graph& g) {
    SubgraphTests tests(g.vertex_count, edge_list(g));
    const int cap = std::max(1, 2 * g.vertex_count - 3);
    return partition_search(
        g, cap, [&](std::uint64_t mask) { return tests.outerplanar(mask); },
        "edge partition search with memoized K_4/K_{2,3}-subdivision outerplanarity",
        euler_lower_bound(g, 2, 3));
}

}  // namespace

OracleResult exact_book_thickness(const Graph& g) {
    if (g.vertex_count > 9)
        throw std::invalid_argument("exact_book_thickness: supports at most 9 vertices");
    return book_thickness_impl(g);
}

OracleResult exact_thickness(const Graph& g) {
    if (g.vertex_count > 10)
        throw std::invalid_argument("exact_thickness: supports at most 10 vertices");
    SubgraphTests tests(g.vertex_count, edge_list(g));
    const int cap =
        g.vertex_count >= 3 ? 3 * g.vertex_count - 6 : static_cast<int>(g.edges.size());
    int lower = euler_lower_bound(g, 3, 6);
    if (!g.edges.empty() && !tests.planar((1ull << g.edges.size()) - 1))
        lower = std::max(lower, 2);
    return partition_search(
        g, std::max(cap, 1), [&](std::uint64_t mask) { return tests.planar(mask); },
        "edge partition search with memoized Kuratowski-subdivision planarity", lower);
}

OracleResult exact_arboricity(const Graph& g) {
    if (g.vertex_count > 10)
        throw std::invalid_argument("exact_arboricity: supports at most 10 vertices");
    const std::vector<Edge> edges = edge_list(g);
    const int m = static_cast<int>(edges.size());
    OracleResult res;
    res.value = nash_williams(g);
    res.method = "Nash-Williams density maximum; witness by backtracking forest colouring";
    if (m == 0) return res;

    const int t = res.value;
    std::vector<std::vector<int>> parent(t + 1,
                                         std::vector<int>(g.vertex_count, -1));
    auto find = [&](int c, int v) {
        while (parent[c][v] >= 0) v = parent[c][v];
        return v;
    };
    std::vector<int> assign(m, 0);
    std::function<bool(int)> dfs = [&](int idx) {
        ++res.states_explored;
        if (idx == m) return true;
        for (int c = 1; c <= t; ++c) {
            const int a = find(c, edges[idx].first);
            const int b = find(c, edges[idx].second);
            if (a == b) {
                ++res.states_pruned;
                continue;
            }
            parent[c][a] = b;
            assign[idx] = c;
            if (dfs(idx + 1)) return true;
            parent[c][a] = -1;
        }
        return false;
    };
    if (!dfs(0))
        throw std::logic_error("exact_arboricity: no forest partition at the Nash-Williams value");
    for (int i = 0; i < m; ++i) res.classes[edges[i]] = assign[i];
    return res;
}

OracleResult exact_star_arboricity(const Graph& g) {
    if (g.edges.size() > 18)
        throw std::invalid_argument("exact_star_arboricity: supports at most 18 edges");
    return star_arboricity_impl(g);
}

Report inequality_chain_check(const Graph& g) {
    if (g.vertex_count > 7)
        throw std::invalid_argument("inequality_chain_check: supports at most 7 vertices");
    if (g.edges.size() > 18)
        throw std::invalid_argument("inequality_chain_check: supports at most 18 edges");
    const int th = exact_thickness(g).value;
    const int to = outerthickness_impl(g).value;
    const int ar = exact_arboricity(g).value;
    const int sa = exact_star_arboricity(g).value;

    Report r;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok)
            r.fail("inequality", {},
                   what + " (thickness " + std::to_string(th) + ", outerthickness " +
                       std::to_string(to) + ", arboricity " + std::to_string(ar) +
                       ", star arboricity " + std::to_string(sa) + ")");
    };
    expect(th <= to, "thickness exceeds outerthickness");
    expect(to <= ar, "outerthickness exceeds arboricity");
    expect(ar <= sa, "arboricity exceeds star arboricity");
    expect(to <= 2 * th, "outerthickness exceeds twice thickness");
    expect(ar <= 3 * th, "arboricity exceeds three times thickness");
    expect(ar <= 2 * to, "arboricity exceeds twice outerthickness");
    expect(sa <= 3 * to, "star arboricity exceeds three times outerthickness");
    expect(sa <= 5 * th, "star arboricity exceeds five times thickness");
    expect(sa <= 2 * ar, "star arboricity exceeds twice arboricity");
    return r;
}

}  // namespace ktdraw
