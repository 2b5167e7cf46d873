// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#include "draw_internal.hpp"
#include "peel_internal.hpp"

namespace ktdraw {

namespace {

using detail::count_alive;
using detail::partition_step;
using detail::Peeler;
using detail::SubPartition;

// Rational point on the unit circle; distinct parameters give distinct
// points, and no three points of a circle are collinear.
Point circle_point(int t) {
    const Rat tt(t);
    const Rat den = 1 + tt * tt;
    return Point{(1 - tt * tt) / den, (2 * tt) / den};
}

Point perp(const Point& a) { return Point{-a.y, a.x}; }

struct Wedge {
    Point g1, g2, axis;
};

struct ForestBuilder {
    const Peeler& p;
    Drawing d;

    // Alive = K_k plus the independent set S.  Any general position drawing
    // works; all colour classes are stars centred on the clique.
    void case_a(const std::vector<bool>& alive, const std::vector<int>& S) {
        std::vector<bool> in_S(p.g.vertex_count, false);
        for (int w : S) in_S[w] = true;
        std::vector<int> clique;
        for (int v = 0; v < p.g.vertex_count; ++v)
            if (alive[v] && !in_S[v]) clique.push_back(v);
        if (static_cast<int>(clique.size()) != p.k)
            throw std::logic_error("forest case A: clique size mismatch");

        int t = 0;
        for (int v = 0; v < p.g.vertex_count; ++v)
            if (alive[v]) d.pos[v] = circle_point(t++);

        std::map<int, int> label;
        for (size_t i = 0; i < clique.size(); ++i) label[clique[i]] = static_cast<int>(i) + 1;
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j)
                d.colour_of[make_edge(clique[i], clique[j])] = label[clique[i]];
        for (int w : S)
            for (int u : p.alive_neighbours(w, alive)) d.colour_of[make_edge(w, u)] = label[u];
    }

    // Pairwise disjoint thin wedges at pv, one per neighbour, the wedge of u
    // containing the ray opposite to u; second member is the half-width used.
    std::pair<std::map<int, Wedge>, Rat> disjoint_wedges(const Point& pv,
                                                         const std::vector<int>& nb) {
        std::map<int, Wedge> wedges;
        Rat sigma(1, 4);
        for (int rounds = 0; rounds < 256; ++rounds, sigma /= 2) {
            wedges.clear();
            for (int u : nb) {
                const Point axis = pv - d.pos.at(u);
                const Point pr = perp(axis);
                wedges[u] = Wedge{axis + sigma * pr, axis - sigma * pr, axis};
            }
            bool ok = true;
            for (int u : nb)
                if (!in_open_cone(wedges[u].axis, wedges[u].g1, wedges[u].g2)) ok = false;
            for (size_t i = 0; ok && i < nb.size(); ++i)
                for (size_t j = 0; ok && j < nb.size(); ++j) {
                    if (i == j) continue;
                    const Wedge &a = wedges[nb[i]], &b = wedges[nb[j]];
                    for (const Point* dir : {&b.g1, &b.g2, &b.axis})
                        if (in_closed_cone(*dir, a.g1, a.g2)) ok = false;
                }
            if (ok) return {wedges, sigma};
        }
        throw std::logic_error("disjoint_wedges: no separating width found");
    }

    // One vertex into (open wedge) ∩ D_eps(pv), extending general position.
    Point place_in_wedge(const Point& pv, const Wedge& X, const Rat& eps, const Rat& sigma) {
        std::vector<Point> pts = detail::all_points(d);
        const Point pr = perp(X.axis);
        Rat tau = sigma / 2;
        for (int tries = 0; tries < 4 * static_cast<int>(pts.size()) + 16; ++tries, tau /= 2) {
            const Point dir = X.axis + tau * pr;
            bool parallel = false;
            for (const Point& x : pts)
                if (x != pv && cross(dir, x - pv) == 0) parallel = true;
            if (!parallel) {
                auto pred = [&](const Point& w) {
                    for (const Point& x : pts)
                        if (x == w) return false;
                    if (!detail::extends_general_position(pts, w)) return false;
                    if (!(dist2(w, pv) < eps * eps)) return false;
                    return in_open_cone(w - pv, X.g1, X.g2);
                };
                Rat lam = eps * detail::dyadic_sqrt_below(1 / (2 * dist2(dir, Point{Rat(0), Rat(0)})));
                for (int halvings = 0; halvings < 512; ++halvings, lam /= 2) {
                    const Point w0 = pv + lam * dir;
                    if (pred(w0)) return detail::snap_to_grid_accept(w0, pred);
                }
            }
        }
        throw std::logic_error("place_in_wedge: no admissible point found");
    }

    void recurse(std::vector<bool>& alive, int nominee) {
        const int n_alive = count_alive(alive);
        if (n_alive == p.k + 1) {
            int w = nominee;
            if (w < 0)
                for (int v = 0; v < p.g.vertex_count && w < 0; ++v)
                    if (alive[v]) w = v;
            case_a(alive, {w});
            return;
        }

        const SubPartition sp = partition_step(p, alive);
        if (sp.case_a) {
            case_a(alive, sp.S);
            return;
        }

        const int v = sp.pivot;
        std::vector<bool> sub = alive;
        for (int w : sp.S) sub[w] = false;
        recurse(sub, count_alive(sub) == p.k + 1 ? v : -1);

        const std::vector<int> nb_v = p.alive_neighbours(v, sub);
        std::map<int, int> u_of_colour;
        for (int u : nb_v) {
            const int c = d.colour_of.at(make_edge(v, u));
            if (!u_of_colour.insert({c, u}).second)
                throw std::logic_error("forest recurse: pivot not colourful");
        }
        if (static_cast<int>(u_of_colour.size()) != p.k)
            throw std::logic_error("forest recurse: pivot misses a colour");

        // Group the new vertices by their one non-neighbour among nb_v.
        std::map<int, std::vector<int>> group;  // u_i -> S_i
        for (int w : sp.S) {
            std::vector<int> missing;
            for (int u : nb_v)
                if (!p.g.has_edge(w, u)) missing.push_back(u);
            if (missing.size() != 1 || !p.g.has_edge(w, v))
                throw std::logic_error("forest recurse: S vertex neighbourhood mismatch");
            group[missing[0]].push_back(w);
        }

        const Point pv = d.pos.at(v);
        const Rat eps = detail::epsilon_empty_unchecked(d, v);
        const auto [wedges, sigma] = disjoint_wedges(pv, nb_v);

        for (int c = 1; c <= p.k; ++c) {
            const int ui = u_of_colour.at(c);
            if (!group.count(ui)) continue;
            for (int w : group.at(ui)) {
                d.pos[w] = place_in_wedge(pv, wedges.at(ui), eps, sigma);
                d.colour_of[make_edge(w, v)] = c;
                for (int u : nb_v)
                    if (u != ui) d.colour_of[make_edge(w, u)] = d.colour_of.at(make_edge(v, u));
            }
        }
    }
};

}  // namespace

Drawing draw_forests(const KTreeBuild& b) {
    const Graph g = realize(b);
    Peeler p(g, b.k);
    std::vector<bool> alive(g.vertex_count, true);
    ForestBuilder fb{p, {}};
    fb.d.colour_count = b.k;
    fb.recurse(alive, -1);
    return fb.d;
}

}  // namespace ktdraw
