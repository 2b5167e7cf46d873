// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#include "ktdraw/verify.hpp"

#include <algorithm>
#include <numeric>

namespace ktdraw {

void Report::fail(std::string kind, std::vector<int> verts, std::string detail) {
    passed = false;
    violations.push_back({std::move(kind), std::move(verts), std::move(detail)});
}

namespace {

// Disjoint-set forest for per-page acyclicity.
struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    // Returns false if u and v were already connected.
    bool unite(int u, int v) {
        const int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
        return true;
    }
};

std::vector<std::vector<Edge>> edges_by_class(const EdgeColouring& colouring, int classes) {
    std::vector<std::vector<Edge>> out(classes + 1);
    for (const auto& [e, c] : colouring) out[c].push_back(e);
    return out;
}

// Forest / star-forest checks for one colour class over vertex ids < n.
void class_shape_checks(const std::vector<Edge>& edges, int n, int colour,
                        LayerMode mode, const char* cycle_kind,
                        const char* star_kind, Report& r) {
    if (mode == LayerMode::Noncrossing) return;
    Dsu dsu(n);
    for (const Edge& e : edges)
        if (!dsu.unite(e.first, e.second))
            r.fail(cycle_kind, {e.first, e.second},
                   "class " + std::to_string(colour) + " has a cycle");
    if (mode != LayerMode::StarForest) return;
    std::vector<int> deg(n, 0);
    for (const Edge& e : edges) {
        ++deg[e.first];
        ++deg[e.second];
    }
    // A component of a star forest has at most one vertex of degree >= 2.
    std::map<int, std::vector<int>> big_by_root;
    for (int v = 0; v < n; ++v)
        if (deg[v] >= 2) big_by_root[dsu.find(v)].push_back(v);
    for (auto& [root, verts] : big_by_root)
        if (verts.size() > 1)
            r.fail(star_kind, verts, "class " + std::to_string(colour) + " is not a star forest");
}

void check_artifact_coverage(const EdgeColouring& colouring, const Graph& g, int classes) {
    for (const Edge& e : g.edges)
        if (!colouring.count(e)) throw std::invalid_argument("coverage mismatch: uncoloured edge");
    for (const auto& [e, c] : colouring) {
        if (!g.edges.count(e)) throw std::invalid_argument("coverage mismatch: edge not in graph");
        if (c < 1 || c > classes) throw std::invalid_argument("colour index out of range");
    }
}

}  // namespace

Report check_book(const BookEmbedding& emb, const Graph& g, LayerMode mode) {
    check_artifact_coverage(emb.page_of, g, emb.page_count);
    const int n = g.vertex_count;
    if (static_cast<int>(emb.order.size()) != n)
        throw std::invalid_argument("coverage mismatch: order length");
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < emb.order.size(); ++i) {
        const int v = emb.order[i];
        if (v < 0 || v >= n || pos[v] >= 0)
            throw std::invalid_argument("coverage mismatch: order not a permutation");
        pos[v] = static_cast<int>(i);
    }

    Report r;
    const auto pages = edges_by_class(emb.page_of, emb.page_count);
    for (int p = 1; p <= emb.page_count; ++p) {
        const auto& es = pages[p];
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j) {
                const Edge &e = es[i], &f = es[j];
                if (e.first == f.first || e.first == f.second || e.second == f.first ||
                    e.second == f.second)
                    continue;
                const int a = pos[e.first], b = pos[e.second];
                auto inside = [&](int x) {
                    const int rel_b = (b - a + n) % n;
                    const int rel_x = (x - a + n) % n;
                    return 0 < rel_x && rel_x < rel_b;
                };
                if (inside(pos[f.first]) != inside(pos[f.second]))
                    r.fail("page_crossing", {e.first, e.second, f.first, f.second},
                           "page " + std::to_string(p));
            }
        class_shape_checks(es, n, p, mode, "page_cycle", "page_not_star_forest", r);
    }
    return r;
}

namespace {

void geometry_layer_checks(const Drawing& d, int classes, LayerMode mode, Report& r) {
    std::vector<std::pair<int, Point>> pts(d.pos.begin(), d.pos.end());
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (pts[i].second == pts[j].second)
                r.fail("coincident_vertices", {pts[i].first, pts[j].first}, "");
    // with coincident vertices the remaining geometry is ill-defined
    if (!r.passed) return;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            if (pts[i].second == pts[j].second) continue;
            for (size_t l = j + 1; l < n; ++l)
                if (collinear(pts[i].second, pts[j].second, pts[l].second))
                    r.fail("general_position", {pts[i].first, pts[j].first, pts[l].first},
                           "collinear triple");
        }

    const auto layers = edges_by_class(d.colour_of, classes);
    int maxv = -1;
    for (const auto& [v, p] : d.pos) maxv = std::max(maxv, v);
    for (int c = 1; c <= classes; ++c) {
        const auto& es = layers[c];
        for (size_t i = 0; i < es.size(); ++i)
            for (size_t j = i + 1; j < es.size(); ++j) {
                const Edge &e = es[i], &f = es[j];
                if (segments_cross(d.pos.at(e.first), d.pos.at(e.second), d.pos.at(f.first),
                                   d.pos.at(f.second)))
                    r.fail("layer_crossing", {e.first, e.second, f.first, f.second},
                           "colour " + std::to_string(c));
            }
        class_shape_checks(es, maxv + 1, c, mode, "layer_cycle", "layer_not_star_forest", r);
    }
}

}  // namespace

Report check_drawing_layers(const Drawing& d, const Graph& g, LayerMode mode) {
    check_artifact_coverage(d.colour_of, g, d.colour_count);
    if (static_cast<int>(d.pos.size()) != g.vertex_count)
        throw std::invalid_argument("coverage mismatch: vertex count");
    for (const auto& [v, p] : d.pos)
        if (v < 0 || v >= g.vertex_count)
            throw std::invalid_argument("coverage mismatch: unknown vertex position");

    Report r;
    geometry_layer_checks(d, d.colour_count, mode, r);
    return r;
}

bool check_colourful(const EdgeColouring& colouring, int v) {
    std::set<int> seen;
    for (const auto& [e, c] : colouring) {
        if (e.first != v && e.second != v) continue;
        if (!seen.insert(c).second) return false;
    }
    return true;
}

std::optional<std::map<int, int>> fan_labels(const Drawing& d, int v) {
    std::vector<int> nb;
    for (const auto& [e, c] : d.colour_of) {
        if (e.first == v) nb.push_back(e.second);
        if (e.second == v) nb.push_back(e.first);
    }
    std::sort(nb.begin(), nb.end());
    if (nb.empty() || nb.size() % 2 != 0)
        throw std::invalid_argument("fan check: vertex degree must be even and positive");
    const int k = static_cast<int>(nb.size()) / 2;

    struct Entry {
        Point dir;
        int u;
        bool opp;
    };
    const Point pv = d.pos.at(v);
    std::vector<Entry> entries;
    for (int u : nb) {
        const Point dir = d.pos.at(u) - pv;
        if (dir == Point{Rat(0), Rat(0)}) return std::nullopt;
        entries.push_back({dir, u, false});
        entries.push_back({Point{-dir.x, -dir.y}, u, true});
    }
    const Point ref = entries.front().dir;
    std::stable_sort(entries.begin(), entries.end(),
                     [&](const Entry& a, const Entry& b) { return cw_before(ref, a.dir, b.dir); });
    const size_t m = entries.size();
    for (size_t i = 0; i < m; ++i)
        if (same_direction(entries[i].dir, entries[(i + 1) % m].dir))
            return std::nullopt;  // degenerate: two rays coincide

    for (int offset = 0; offset <= 1; ++offset) {
        std::map<int, int> partner;
        bool ok = true;
        for (size_t j = 0; ok && j < m; j += 2) {
            const Entry& x = entries[(j + offset) % m];
            const Entry& y = entries[(j + 1 + offset) % m];
            if (x.opp == y.opp) {
                ok = false;
                break;
            }
            const Entry& ray = x.opp ? y : x;
            const Entry& oray = x.opp ? x : y;
            if (ray.u == oray.u) {
                ok = false;
                break;
            }
            partner[ray.u] = oray.u;
        }
        if (!ok) continue;
        for (const auto& [a, b] : partner)
            if (!partner.count(b) || partner.at(b) != a) {
                ok = false;
                break;
            }
        if (!ok) continue;

        // Colour condition: the two edges of a partner pair share a colour,
        // and the k pairs carry the k distinct colours 1..k.
        std::map<int, std::pair<int, int>> pair_of_colour;
        for (const auto& [a, b] : partner) {
            if (a > b) continue;
            const int ca = d.colour_of.at(make_edge(v, a));
            const int cb = d.colour_of.at(make_edge(v, b));
            if (ca != cb) {
                ok = false;
                break;
            }
            if (pair_of_colour.count(ca)) {
                ok = false;
                break;
            }
            pair_of_colour[ca] = {a, b};
        }
        if (!ok) continue;
        bool colours_ok = static_cast<int>(pair_of_colour.size()) == k;
        for (int c = 1; colours_ok && c <= k; ++c)
            if (!pair_of_colour.count(c)) colours_ok = false;
        if (!colours_ok) continue;

        std::map<int, int> labels;
        for (const auto& [c, ab] : pair_of_colour) {
            labels[ab.first] = c;
            labels[ab.second] = -c;
        }
        return labels;
    }
    return std::nullopt;
}

bool check_fan(const Drawing& d, int v) { return fan_labels(d, v).has_value(); }

Report check_good(const Drawing& d, const KTreeBuild& b) {
    if (b.k < 4 || b.k % 2 != 0)
        throw std::invalid_argument("check_good: build parameter must be even and >= 4");
    const Graph g = realize(b);
    check_artifact_coverage(d.colour_of, g, d.colour_count);
    if (static_cast<int>(d.pos.size()) != g.vertex_count)
        throw std::invalid_argument("coverage mismatch: vertex count");

    Report r;
    const int half = b.k / 2;
    if (d.colour_count > half)
        r.fail("colour_count", {}, "more than " + std::to_string(half) + " colours");
    geometry_layer_checks(d, d.colour_count, LayerMode::Noncrossing, r);
    for (const Violation& v : r.violations)
        if (v.kind == "coincident_vertices") return r;  // ray fans undefined

    if (g.vertex_count == b.k + 1) {
        bool any = false;
        for (int v = 0; v < g.vertex_count && !any; ++v)
            if (check_fan(d, v)) any = true;
        if (!any) r.fail("fan", {}, "complete graph has no fan vertex");
    } else {
        for (int v : simplicial_vertices(g, b.k))
            if (!check_fan(d, v)) r.fail("fan", {v}, "simplicial vertex is not a fan");
    }
    return r;
}

int nash_williams(const Graph& g) {
    const int n = g.vertex_count;
    if (n > 12) throw std::invalid_argument("nash_williams: n too large (max 12)");
    std::vector<unsigned> edge_masks;
    for (const Edge& e : g.edges)
        edge_masks.push_back((1u << e.first) | (1u << e.second));
    int best = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        const int pop = __builtin_popcount(mask);
        if (pop < 2) continue;
        int inside = 0;
        for (unsigned em : edge_masks)
            if ((em & mask) == em) ++inside;
        best = std::max(best, (inside + pop - 2) / (pop - 1));
    }
    return best;
}

}  // namespace ktdraw
