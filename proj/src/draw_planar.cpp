// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#include <set>

#include "draw_internal.hpp"

namespace ktdraw {

namespace {

// Exact squared distance between two disjoint closed segments: attained at an
// endpoint of one against the other (the interior-interior case forces the
// segments parallel, where an endpoint pair achieves the same distance).
Rat disjoint_seg_dist2(const Point& a, const Point& b, const Point& c, const Point& d) {
    Rat best = point_segment_dist2(a, c, d);
    const Rat r1 = point_segment_dist2(b, c, d);
    if (r1 < best) best = r1;
    const Rat r2 = point_segment_dist2(c, a, b);
    if (r2 < best) best = r2;
    const Rat r3 = point_segment_dist2(d, a, b);
    if (r3 < best) best = r3;
    return best;
}

struct PlanarBuilder {
    Drawing d;

    void add_edge(int u, int v) { d.colour_of[make_edge(u, v)] = 1; }

    bool placement_ok(const Point& w, const std::vector<int>& parents) const {
        std::vector<Point> pts;
        for (const auto& [u, p] : d.pos) {
            if (p == w) return false;
            pts.push_back(p);
        }
        if (!detail::extends_general_position(pts, w)) return false;
        for (const auto& [e, c] : d.colour_of)
            for (int par : parents)
                if (segments_cross(w, d.pos.at(par), d.pos.at(e.first), d.pos.at(e.second)))
                    return false;
        return true;
    }

    // New vertex near parent vertex p, inside the empty disc of p, in a
    // direction parallel to no segment from p to an existing vertex.
    Point near_vertex(int p) const {
        const Point pp = d.pos.at(p);
        const Rat eps = detail::epsilon_empty_unchecked(d, p);
        std::set<Rat> slopes;
        for (const auto& [u, q] : d.pos) {
            if (u == p) continue;
            const Point du = q - pp;
            if (du.x != 0) slopes.insert(du.y / du.x);
        }
        Rat tau = 0;
        while (slopes.count(tau)) tau = tau == 0 ? Rat(1, 2) : tau / 2;
        const Rat lam = eps / 4;
        return Point{pp.x + lam, pp.y + lam * tau};
    }

    // New vertex near the midpoint m of the parent edge pq: within half the
    // distance from m to every vertex, edge, and midpoint-avoiding line, in
    // an offset direction parallel to no line through m.
    Point near_edge_midpoint(int p, int q, int side) const {
        const Point pp = d.pos.at(p), qq = d.pos.at(q);
        const Point m = Rat(1, 2) * (pp + qq);
        const Point dvec = qq - pp;
        const Point nvec{-dvec.y, dvec.x};

        Rat min_d2(-1);
        auto feed = [&](const Rat& v2) {
            if (min_d2 < 0 || v2 < min_d2) min_d2 = v2;
        };
        for (const auto& [u, pt] : d.pos)
            if (u != p && u != q) feed(point_segment_dist2(pt, pp, qq));
        for (const auto& [e, c] : d.colour_of) {
            const Point &a = d.pos.at(e.first), &b = d.pos.at(e.second);
            const bool at_p = e.first == p || e.second == p;
            const bool at_q = e.first == q || e.second == q;
            if (at_p && at_q) continue;  // the parent edge itself
            if (at_p)
                feed(disjoint_seg_dist2(m, qq, a, b));
            else if (at_q)
                feed(disjoint_seg_dist2(m, pp, a, b));
            else
                feed(disjoint_seg_dist2(pp, qq, a, b));
        }
        std::vector<Point> through_dirs{dvec};
        std::vector<Point> pts;
        for (const auto& [u, pt] : d.pos) pts.push_back(pt);
        for (size_t i = 0; i < pts.size(); ++i)
            for (size_t j = i + 1; j < pts.size(); ++j) {
                if (pts[i] == pp && pts[j] == qq) continue;
                if (pts[i] == qq && pts[j] == pp) continue;
                const Rat dd = point_line_dist2(m, pts[i], pts[j]);
                if (dd > 0)
                    feed(dd);
                else
                    through_dirs.push_back(pts[j] - pts[i]);
            }

        // tau is bad when nvec + tau*dvec is parallel to a line through m.
        std::set<Rat> bad;
        for (const Point& g : through_dirs) {
            const Rat denom = cross(dvec, g);
            if (denom != 0) bad.insert(-cross(nvec, g) / denom);
        }
        Rat tau = 0;
        while (bad.count(tau)) tau = tau == 0 ? Rat(1, 4) : tau / 2;

        const Rat d2 = dist2(pp, qq);
        const Rat eta = detail::dyadic_sqrt_below(min_d2 / (16 * d2));
        const Rat sgn = side;
        return Point{m.x + sgn * eta * (nvec.x + tau * dvec.x),
                     m.y + sgn * eta * (nvec.y + tau * dvec.y)};
    }

    void place(int v, const std::vector<int>& parents) {
        auto pred = [&](const Point& w) { return placement_ok(w, parents); };
        if (parents.size() == 1) {
            d.pos[v] = detail::snap_to_grid_accept(near_vertex(parents[0]), pred);
        } else {
            const Point plus = near_edge_midpoint(parents[0], parents[1], 1);
            const Point w0 = pred(plus) ? plus : near_edge_midpoint(parents[0], parents[1], -1);
            d.pos[v] = detail::snap_to_grid_accept(w0, pred);
        }
        for (int p : parents) add_edge(v, p);
    }
};

}  // namespace

Drawing draw_planar_2tree(const KTreeBuild& b) {
    if (b.k < 1 || b.k > 2)
        throw std::invalid_argument("draw_planar_2tree: build parameter must be 1 or 2");
    realize(b);  // full build validation

    PlanarBuilder pb;
    pb.d.colour_count = 1;
    if (b.k == 1) {
        pb.d.pos[b.base[0]] = Point{Rat(0), Rat(0)};
        pb.d.pos[b.base[1]] = Point{Rat(1), Rat(0)};
        pb.add_edge(b.base[0], b.base[1]);
    } else {
        pb.d.pos[b.base[0]] = Point{Rat(0), Rat(0)};
        pb.d.pos[b.base[1]] = Point{Rat(1), Rat(0)};
        pb.d.pos[b.base[2]] = Point{Rat(0), Rat(1)};
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) pb.add_edge(b.base[i], b.base[j]);
    }
    for (const Addition& a : b.additions) pb.place(a.v, a.clique);
    return pb.d;
}

}  // namespace ktdraw
