// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#include <algorithm>
#include <functional>

#include "ktdraw/verify.hpp"

namespace ktdraw {

namespace {

// l^k with saturation; anything past 2^30 exceeds every representable s.
long long pow_sat(int l, int k) {
    long long r = 1;
    for (int i = 0; i < k; ++i) {
        r *= l;
        if (r > (1LL << 30)) return 1LL << 30;
    }
    return r;
}

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(std::string("precondition violated: ") + what);
}

void require_coverage(const EdgeColouring& colouring, const Graph& g, int classes) {
    require(colouring.size() == g.edges.size(), "colouring size mismatch");
    for (const Edge& e : g.edges) {
        auto it = colouring.find(e);
        require(it != colouring.end(), "uncoloured edge");
        require(1 <= it->second && it->second <= classes, "colour out of range");
    }
}

bool validate_witness(const MonoWitness& w, const Graph& g, const EdgeColouring& colouring) {
    const auto& v = w.vertices;
    std::set<int> distinct(v.begin(), v.end());
    if (distinct.size() != v.size()) return false;
    for (int x : v)
        if (x < 0 || x >= g.vertex_count) return false;

    std::vector<Edge> need;
    switch (w.kind) {
        case MonoWitness::Kind::K33:
            if (v.size() != 6) return false;
            for (int i = 0; i < 3; ++i)
                for (int j = 3; j < 6; ++j) need.push_back(make_edge(v[i], v[j]));
            break;
        case MonoWitness::Kind::K23:
            if (v.size() != 5) return false;
            for (int i = 0; i < 2; ++i)
                for (int j = 2; j < 5; ++j) need.push_back(make_edge(v[i], v[j]));
            break;
        case MonoWitness::Kind::P4:
            if (v.size() != 4) return false;
            for (int i = 0; i + 1 < 4; ++i) need.push_back(make_edge(v[i], v[i + 1]));
            break;
        case MonoWitness::Kind::C4:
            if (v.size() != 4) return false;
            for (int i = 0; i < 4; ++i) need.push_back(make_edge(v[i], v[(i + 1) % 4]));
            break;
    }
    for (const Edge& e : need) {
        auto it = colouring.find(e);
        if (it == colouring.end() || it->second != w.colour) return false;
        if (!g.edges.count(e)) return false;
    }
    return true;
}

ColourVector spoke_vector(int x, int k, const EdgeColouring& colouring) {
    ColourVector cv;
    cv.vertex = x;
    for (int c = 0; c < k; ++c) cv.entries.insert({colouring.at(make_edge(x, c)), c});
    return cv;
}

// Independent-set vertices of K*_{k,s} grouped by colour vector; the chosen
// bucket is the one with >= 3 members whose lowest member is smallest.
std::vector<int> pigeonhole_bucket(int k, int s, const EdgeColouring& colouring) {
    std::map<ColourVector, std::vector<int>> buckets;
    for (int x = k; x < k + s; ++x) buckets[spoke_vector(x, k, colouring)].push_back(x);
    const std::vector<int>* best = nullptr;
    for (const auto& [cv, members] : buckets) {
        if (members.size() < 3) continue;
        if (!best || members.front() < best->front()) best = &members;
    }
    if (!best) throw std::logic_error("pigeonhole bucket missing");  // unreachable under pre
    return *best;
}

// Clique vertices whose spokes at x all carry one colour, smallest such
// colour with at least `want` spokes; ascending, truncated to `want`.
std::pair<int, std::vector<int>> repeated_spoke_colour(int x, int k, int want,
                                                      const EdgeColouring& colouring) {
    std::map<int, std::vector<int>> by_colour;
    for (int c = 0; c < k; ++c) by_colour[colouring.at(make_edge(x, c))].push_back(c);
    for (const auto& [col, cls] : by_colour)
        if (static_cast<int>(cls.size()) >= want)
            return {col, std::vector<int>(cls.begin(), cls.begin() + want)};
    throw std::logic_error("spoke pigeonhole missing");  // unreachable under pre
}

MonoWitness complete_bipartite_fallback(MonoWitness::Kind kind, int side, const Graph& g,
                                        const EdgeColouring& colouring, int k, int classes,
                                        const std::vector<int>& bucket) {
    std::vector<int> cl(k);
    for (int c = 0; c < k; ++c) cl[c] = c;
    std::vector<std::vector<int>> clique_sides, s_sides;
    std::vector<int> pick;
    auto combos = [](const std::vector<int>& pool, int r) {
        std::vector<std::vector<int>> out;
        std::vector<int> idx(r);
        std::vector<int> cur;
        // plain nested index enumeration in lexicographic order
        std::function<void(size_t, int)> rec = [&](size_t start, int left) {
            if (left == 0) {
                out.push_back(cur);
                return;
            }
            for (size_t i = start; i + left <= pool.size(); ++i) {
                cur.push_back(pool[i]);
                rec(i + 1, left - 1);
                cur.pop_back();
            }
        };
        rec(0, r);
        return out;
    };
    for (const auto& cs : combos(cl, side))
        for (const auto& ss : combos(bucket, 3))
            for (int col = 1; col <= classes; ++col) {
                MonoWitness w;
                w.kind = kind;
                w.colour = col;
                w.vertices = cs;
                w.vertices.insert(w.vertices.end(), ss.begin(), ss.end());
                if (validate_witness(w, g, colouring)) return w;
            }
    throw std::logic_error("refuter fallback exhausted");
}

}  // namespace

MonoWitness refute_thickness(int k, int l, int s, const EdgeColouring& colouring) {
    require(k >= 3, "k >= 3");
    require(1 <= l && l <= (k + 1) / 2 - 1, "1 <= l <= ceil(k/2)-1");
    require((k + l - 1) / l >= 3, "ceil(k/l) >= 3");
    require(s >= 2 * pow_sat(l, k) + 1, "s >= 2l^k+1");
    const Graph g = realize(complete_split(k, s));
    require_coverage(colouring, g, l);

    const std::vector<int> bucket = pigeonhole_bucket(k, s, colouring);
    const auto [col, cliq] = repeated_spoke_colour(bucket[0], k, 3, colouring);
    MonoWitness w;
    w.kind = MonoWitness::Kind::K33;
    w.colour = col;
    w.vertices = {cliq[0], cliq[1], cliq[2], bucket[0], bucket[1], bucket[2]};
    if (validate_witness(w, g, colouring)) return w;
    return complete_bipartite_fallback(MonoWitness::Kind::K33, 3, g, colouring, k, l, bucket);
}

MonoWitness refute_outerthickness(int k, int l, int s, const EdgeColouring& colouring) {
    require(k >= 2, "k >= 2");
    require(1 <= l && l <= k - 1, "1 <= l <= k-1");
    require(s >= 2 * pow_sat(l, k) + 1, "s >= 2l^k+1");
    const Graph g = realize(complete_split(k, s));
    require_coverage(colouring, g, l);

    const std::vector<int> bucket = pigeonhole_bucket(k, s, colouring);
    const auto [col, cliq] = repeated_spoke_colour(bucket[0], k, 2, colouring);
    MonoWitness w;
    w.kind = MonoWitness::Kind::K23;
    w.colour = col;
    w.vertices = {cliq[0], cliq[1], bucket[0], bucket[1], bucket[2]};
    if (validate_witness(w, g, colouring)) return w;
    return complete_bipartite_fallback(MonoWitness::Kind::K23, 2, g, colouring, k, l, bucket);
}

MonoWitness refute_star_arboricity(int k, const EdgeColouring& colouring) {
    require(k >= 1, "k >= 1");
    const StarLbGadget gadget = star_lb_graph(k);
    require_coverage(colouring, gadget.graph, k);
    const int s = static_cast<int>(gadget.s_vertices.size());

    auto spokes_of = [&](int x) {
        ColourVector cv;
        cv.vertex = x;
        for (int c : gadget.clique) cv.entries.insert({colouring.at(make_edge(x, c)), c});
        return cv;
    };
    // First repeated vector in ascending vertex order gives the pair (x, y).
    std::map<ColourVector, int> first_seen;
    int x = -1, y = -1;
    for (int i = 0; i < s && x < 0; ++i) {
        const int v = gadget.s_vertices[i];
        auto [it, inserted] = first_seen.insert({spokes_of(v), v});
        if (!inserted) {
            x = it->second;
            y = v;
        }
    }
    if (x < 0) throw std::logic_error("pigeonhole bucket missing");  // unreachable: s = k^k+1

    MonoWitness w;
    std::map<int, std::vector<int>> by_colour;
    for (int c : gadget.clique) by_colour[colouring.at(make_edge(x, c))].push_back(c);
    bool repeated = false;
    for (const auto& [col, cls] : by_colour)
        if (cls.size() >= 2) {
            w.kind = MonoWitness::Kind::C4;
            w.colour = col;
            w.vertices = {x, cls[0], y, cls[1]};
            repeated = true;
            break;
        }
    if (!repeated) {
        // All k colours appear on x's spokes, so the pendant edge's colour
        // names a unique clique vertex p with xp (and hence yp) that colour.
        const int xi = static_cast<int>(
            std::find(gadget.s_vertices.begin(), gadget.s_vertices.end(), x) -
            gadget.s_vertices.begin());
        const int xp = gadget.pendants[xi];
        const int pend_colour = colouring.at(make_edge(x, xp));
        w.kind = MonoWitness::Kind::P4;
        w.colour = pend_colour;
        w.vertices = {xp, x, by_colour.at(pend_colour).front(), y};
    }
    if (validate_witness(w, gadget.graph, colouring)) return w;

    // Defensive fallback inside the identified pair: every shape the proof
    // could have produced from x, y and their pendants.
    const int xi = static_cast<int>(
        std::find(gadget.s_vertices.begin(), gadget.s_vertices.end(), x) -
        gadget.s_vertices.begin());
    const int yi = static_cast<int>(
        std::find(gadget.s_vertices.begin(), gadget.s_vertices.end(), y) -
        gadget.s_vertices.begin());
    for (int col = 1; col <= k; ++col) {
        for (int a : gadget.clique)
            for (int b : gadget.clique) {
                if (a == b) continue;
                MonoWitness c4{MonoWitness::Kind::C4, {x, a, y, b}, col};
                if (validate_witness(c4, gadget.graph, colouring)) return c4;
            }
        for (auto [u, pu, v] : {std::tuple{x, gadget.pendants[xi], y},
                                std::tuple{y, gadget.pendants[yi], x}})
            for (int p : gadget.clique) {
                MonoWitness p4{MonoWitness::Kind::P4, {pu, u, p, v}, col};
                if (validate_witness(p4, gadget.graph, colouring)) return p4;
            }
    }
    throw std::logic_error("refuter fallback exhausted");
}

}  // namespace ktdraw
