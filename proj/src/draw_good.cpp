// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#include <algorithm>

#include "draw_internal.hpp"
#include "ktdraw/verify.hpp"
#include "peel_internal.hpp"

namespace ktdraw {

namespace {

using detail::count_alive;
using detail::partition_step;
using detail::Peeler;
using detail::SubPartition;

constexpr int kMaxHalvings = 512;

Point circle_point(int t) {
    const Rat tt(t);
    const Rat den = 1 + tt * tt;
    return Point{(1 - tt * tt) / den, (2 * tt) / den};
}

Point entry_dir(const Drawing& d, int centre, const std::pair<int, bool>& e) {
    const Point q = d.pos.at(e.first) - d.pos.at(centre);
    return e.second ? Point{-q.x, -q.y} : q;
}

// K_{2k+1} on the given 2k circle ids (in circle order u_1..u_2k) plus
// fan_id near the centre: antipodal circle points, zig-zag colouring, the
// spoke to u_a coloured like the diameter through u_a.
Drawing base_complete_impl(const std::vector<int>& circle_ids, int fan_id, int khalf) {
    const int twok = 2 * khalf;
    Drawing d;
    d.colour_count = khalf;
    std::vector<Point> upos(twok + 1);
    for (int a = 1; a <= khalf; ++a) {
        upos[a] = circle_point(a);
        upos[khalf + a] = Point{-upos[a].x, -upos[a].y};
    }
    for (int a = 1; a <= twok; ++a) d.pos[circle_ids[a - 1]] = upos[a];
    for (int a = 1; a <= twok; ++a)
        for (int b = a + 1; b <= twok; ++b)
            d.colour_of[make_edge(circle_ids[a - 1], circle_ids[b - 1])] =
                1 + ((a + b) % twok) / 2;
    auto diameter_colour = [&](int a) {
        const int alpha = (a - 1) % khalf + 1;
        return 1 + ((2 * alpha + khalf) % twok) / 2;
    };

    std::vector<Point> pts;
    for (int a = 1; a <= twok; ++a) pts.push_back(upos[a]);
    auto pred = [&](const Point& q) {
        for (const Point& x : pts)
            if (x == q) return false;
        if (!detail::extends_general_position(pts, q)) return false;
        for (int a = 1; a <= twok; ++a) {
            const int c = diameter_colour(a);
            for (const auto& [e, c2] : d.colour_of)
                if (c2 == c &&
                    segments_cross(q, upos[a], d.pos.at(e.first), d.pos.at(e.second)))
                    return false;
        }
        Drawing tmp = d;
        tmp.pos[fan_id] = q;
        for (int a = 1; a <= twok; ++a)
            tmp.colour_of[make_edge(fan_id, circle_ids[a - 1])] = diameter_colour(a);
        return fan_labels(tmp, fan_id).has_value();
    };

    const Point dir = upos[1] + upos[2];
    Rat mu(1, 4);
    for (int step = 0; step < kMaxHalvings; ++step, mu /= 2) {
        const Point w0 = mu * dir;
        if (!pred(w0)) continue;
        d.pos[fan_id] = detail::snap_to_grid_accept(w0, pred);
        for (int a = 1; a <= twok; ++a)
            d.colour_of[make_edge(fan_id, circle_ids[a - 1])] = diameter_colour(a);
        return d;
    }
    throw std::logic_error("base_complete_impl: no admissible centre cell point");
}

// Lemma-style insertion of new_w next to the fan fan_v, inside the empty
// disc, in the gap of the ray arrangement clockwise after ray(fan_v, u_1).
Drawing insert_fan_impl(const Drawing& d, int fan_v, int new_w) {
    const auto labels = fan_labels(d, fan_v);
    if (!labels) throw std::invalid_argument("insert_fan_copy: vertex is not a fan");
    const Point pv = d.pos.at(fan_v);
    const RayFan fan = ray_fan(d, fan_v);
    const size_t m = fan.rays.size();

    size_t idx_a = m;
    for (size_t i = 0; i < m; ++i)
        if (!fan.rays[i].second && labels->at(fan.rays[i].first) == 1) idx_a = i;
    if (idx_a == m) throw std::logic_error("insert_fan_impl: ray of u_1 missing");
    auto partner = [&](size_t i) {
        return fan.rays[i].second && labels->at(fan.rays[i].first) == -1;
    };
    size_t pair_end;
    if (partner((idx_a + 1) % m))
        pair_end = (idx_a + 1) % m;
    else if (partner((idx_a + m - 1) % m))
        pair_end = idx_a;
    else
        throw std::logic_error("insert_fan_impl: fan pairing broken");
    const Point dirA = entry_dir(d, fan_v, fan.rays[pair_end]);
    const Point dirB = entry_dir(d, fan_v, fan.rays[(pair_end + 1) % m]);

    const Rat eps = detail::epsilon_empty_unchecked(d, fan_v);
    const Rat eps2 = eps * eps;
    std::vector<Point> pts = detail::all_points(d);
    struct Seg {
        int a, b;
        Point pa, pb;
    };
    std::vector<std::vector<Seg>> by_colour(d.colour_count + 1);
    for (const auto& [e, c] : d.colour_of)
        by_colour[c].push_back({e.first, e.second, d.pos.at(e.first), d.pos.at(e.second)});

    // Probes only ever test segments that could be crossed.  A segment not
    // incident to the fan centre lies on a line through two other vertices,
    // which the empty disc avoids entirely, so the whole disc sits on the
    // centre's side of that line; unless the line separates pu from the
    // disc, the spoke [q, pu] can never reach the segment.
    struct Checks {
        Point pu;
        std::vector<Seg> segs;
    };
    std::vector<Checks> checks;
    for (const auto& [u, lab] : *labels) {
        Checks c{d.pos.at(u), {}};
        for (const Seg& s : by_colour[std::abs(lab)]) {
            if (s.a == u || s.b == u) continue;
            if (s.a != fan_v && s.b != fan_v &&
                sign(cross3(s.pa, s.pb, c.pu)) == sign(cross3(s.pa, s.pb, pv)))
                continue;
            c.segs.push_back(s);
        }
        if (!c.segs.empty()) checks.push_back(std::move(c));
    }

    auto region = [&](const Point& q) {
        if (!(dist2(q, pv) < eps2)) return false;
        if (!in_open_cone(q - pv, dirA, dirB)) return false;
        for (const Checks& c : checks)
            for (const Seg& s : c.segs)
                if (segments_cross(q, c.pu, s.pa, s.pb)) return false;
        return true;
    };
    auto pred = [&](const Point& q) {
        return region(q) && detail::extends_general_position(pts, q);
    };

    // Direction inside the open gap, parallel to no line through fan_v.
    Point dir = dirA + dirB;
    for (int a = 0; a < static_cast<int>(pts.size()) + 4; ++a) {
        bool parallel = false;
        for (const Point& x : pts)
            if (x != pv && cross(dir, x - pv) == 0) parallel = true;
        if (!parallel) break;
        dir = dir + dirA;  // stays strictly inside the gap cone
    }

    Drawing out = d;
    Rat mu = detail::dyadic_sqrt_below(eps * eps / (2 * dist2(dir, Point{Rat(0), Rat(0)})));
    for (int step = 0; step < kMaxHalvings; ++step, mu /= 2) {
        const Point w0 = pv + mu * dir;
        if (!pred(w0)) continue;
        out.pos[new_w] = detail::snap_to_grid_accept(w0, region, pred);
        for (const auto& [u, lab] : *labels)
            out.colour_of[make_edge(new_w, u)] = std::abs(lab);
        return out;
    }
    throw std::logic_error("insert_fan_impl: no admissible point in the gap");
}

struct GoodBuilder {
    const Peeler& p;
    Drawing d;

    int lowest_alive(const std::vector<bool>& alive) const {
        for (int v = 0; v < p.g.vertex_count; ++v)
            if (alive[v]) return v;
        throw std::logic_error("lowest_alive: empty alive set");
    }

    void base_case(const std::vector<bool>& alive, int fan) {
        std::vector<int> circle;
        for (int v = 0; v < p.g.vertex_count; ++v)
            if (alive[v] && v != fan) circle.push_back(v);
        d = base_complete_impl(circle, fan, p.k / 2);
    }

    void case_a(const std::vector<bool>& alive, const std::vector<int>& S) {
        std::vector<bool> in_S(p.g.vertex_count, false);
        for (int w : S) in_S[w] = true;
        std::vector<int> clique;
        for (int v = 0; v < p.g.vertex_count; ++v)
            if (alive[v] && !in_S[v]) clique.push_back(v);
        if (static_cast<int>(clique.size()) != p.k || !is_clique(p.g, clique))
            throw std::logic_error("good case A: remainder is not the clique K_2k");
        d = base_complete_impl(clique, S[0], p.k / 2);
        for (size_t i = 1; i < S.size(); ++i) d = insert_fan_impl(d, S[0], S[i]);
    }

    // Signed indices in the order +1, -1, +2, -2, ...
    static std::vector<int> signed_order(int khalf) {
        std::vector<int> order;
        for (int c = 1; c <= khalf; ++c) {
            order.push_back(c);
            order.push_back(-c);
        }
        return order;
    }

    void case_b(const std::vector<bool>& alive, const SubPartition& sp, int khalf) {
        const int v = sp.pivot;
        const Point pv = d.pos.at(v);
        const auto labels = fan_labels(d, v);
        if (!labels) throw std::logic_error("good case B: pivot is not a fan");
        std::map<int, int> u_of;  // signed index -> neighbour
        for (const auto& [u, lab] : *labels) u_of[lab] = u;

        // Group S by the one missing neighbour's signed index; representative
        // is the lowest id of each group.
        std::map<int, std::vector<int>> groups;
        for (int w : sp.S) {
            std::vector<int> missing;
            for (const auto& [u, lab] : *labels)
                if (!p.g.has_edge(w, u)) missing.push_back(lab);
            if (missing.size() != 1 || !p.g.has_edge(w, v))
                throw std::logic_error("good case B: S vertex neighbourhood mismatch");
            groups[missing[0]].push_back(w);
        }

        const Rat eps = detail::epsilon_empty_unchecked(d, v);
        // Detach the subdivided edges v u_{-i} before placing representatives
        // on the open segments.
        for (const auto& [i, members] : groups) {
            const Edge e = make_edge(v, u_of.at(-i));
            if (d.colour_of.at(e) != std::abs(i))
                throw std::logic_error("good case B: fan colours inconsistent");
            d.colour_of.erase(e);
        }

        auto wedge_excluded = [&](const Point& probe, const Point& apex, int r) {
            // probe (relative to apex) against the r-wedge of the vertex at apex
            return in_closed_cone(probe - apex, d.pos.at(u_of.at(r)) - apex,
                                  apex - d.pos.at(u_of.at(-r)));
        };

        std::vector<std::pair<int, int>> placed;  // (signed index, vertex id)
        Rat prev_d2(-1);
        for (int i : signed_order(khalf)) {
            if (!groups.count(i)) continue;
            const int rep = *std::min_element(groups.at(i).begin(), groups.at(i).end());
            const Point U = d.pos.at(u_of.at(-i));
            const int u_minus_i = u_of.at(-i);

            const std::vector<std::pair<int, Point>> cur(d.pos.begin(), d.pos.end());
            auto pred = [&](const Rat& t) {
                const Point x = pv + t * (U - pv);
                if (prev_d2 >= 0 && !(4 * dist2(x, pv) < prev_d2)) return false;
                if (!(4 * dist2(x, pv) < eps * eps)) return false;
                for (const auto& [z, q] : d.pos)
                    if (q == x) return false;
                for (int r = 1; r <= khalf; ++r)
                    for (int sr : {r, -r}) {
                        if (sr == i || sr == -i) continue;
                        if (wedge_excluded(pv, x, sr)) return false;
                    }
                for (const auto& [l, xid] : placed) {
                    const Point xl = d.pos.at(xid);
                    for (int r = 1; r <= khalf; ++r)
                        for (int sr : {r, -r}) {
                            if (sr == i || sr == -i || sr == l || sr == -l) continue;
                            if (wedge_excluded(x, xl, sr)) return false;
                            if (wedge_excluded(xl, x, sr)) return false;
                        }
                }
                // general position except the designated triple v, x, u_{-i}
                for (size_t a = 0; a < cur.size(); ++a)
                    for (size_t b = a + 1; b < cur.size(); ++b) {
                        if (!collinear(x, cur[a].second, cur[b].second)) continue;
                        const int ia = cur[a].first, ib = cur[b].first;
                        if ((ia == v && ib == u_minus_i) || (ia == u_minus_i && ib == v))
                            continue;
                        return false;
                    }
                return true;
            };

            const Rat bound2 =
                (prev_d2 >= 0 && prev_d2 < eps * eps ? prev_d2 : eps * eps) / 4;
            Rat t = detail::dyadic_sqrt_below(bound2 / dist2(U, pv));
            bool done = false;
            for (int step = 0; step < kMaxHalvings && !done; ++step, t /= 2) {
                if (!pred(t)) continue;
                const Point x = pv + t * (U - pv);
                d.pos[rep] = x;
                prev_d2 = dist2(x, pv);
                d.colour_of[make_edge(rep, v)] = std::abs(i);
                for (const auto& [u, lab] : *labels)
                    if (lab != i) d.colour_of[make_edge(rep, u)] = std::abs(lab);
                placed.push_back({i, rep});
                done = true;
            }
            if (!done) throw std::logic_error("good case B: no segment point for representative");
        }

        // Safe joint displacement: minimum over colours of the perturbation
        // radius of that colour class (with the drawing's full vertex set).
        // The position sweeps are shared across the layers.
        const detail::PerturbationSweep sweep(d.pos);
        std::vector<std::vector<Edge>> layer_edges(khalf + 1);
        for (const auto& [e, c] : d.colour_of) layer_edges[c].push_back(e);
        Rat delta(-1);
        for (int r = 1; r <= khalf; ++r) {
            const Rat er = sweep.layer_radius_unchecked(layer_edges[r]);
            if (delta < 0 || er < delta) delta = er;
        }

        // Move each representative off its segment into the facing wedge.
        for (const auto& [i, xid] : placed) {
            const Point x = d.pos.at(xid);
            const Point g1 = d.pos.at(u_of.at(-i)) - pv;
            const Point g2 = pv - d.pos.at(u_of.at(i));
            const Point dir = g1 + g2;
            std::vector<Point> others;
            for (const auto& [z, q] : d.pos)
                if (z != xid) others.push_back(q);
            auto region = [&](const Point& y) {
                if (!(dist2(y, x) < delta * delta)) return false;
                if (!(dist2(y, pv) < eps * eps)) return false;
                return in_open_cone(y - pv, g1, g2);
            };
            auto pred = [&](const Point& y) {
                return region(y) && detail::extends_general_position(others, y);
            };
            const Rat cap = std::min(Rat(delta * delta), Rat(eps * eps / 4));
            Rat mu = detail::dyadic_sqrt_below(cap / dist2(dir, Point{Rat(0), Rat(0)}));
            bool done = false;
            for (int step = 0; step < kMaxHalvings && !done; ++step, mu /= 2) {
                const Point y0 = x + mu * dir;
                if (!pred(y0)) continue;
                d.pos[xid] = detail::snap_to_grid_accept(y0, region, pred);
                done = true;
            }
            if (!done) throw std::logic_error("good case B: representative move failed");
        }

        // Reattach the subdivided edges and insert the remaining copies.
        for (const auto& [i, xid] : placed)
            d.colour_of[make_edge(v, u_of.at(-i))] = std::abs(i);
        for (const auto& [i, xid] : placed)
            for (int w : groups.at(i))
                if (w != xid) d = insert_fan_impl(d, xid, w);
    }

    void recurse(std::vector<bool>& alive, int nominee) {
        const int n_alive = count_alive(alive);
        if (n_alive == p.k + 1) {
            base_case(alive, nominee >= 0 ? nominee : lowest_alive(alive));
            return;
        }
        const SubPartition sp = partition_step(p, alive);
        if (sp.case_a) {
            case_a(alive, sp.S);
            return;
        }
        std::vector<bool> sub = alive;
        for (int w : sp.S) sub[w] = false;
        recurse(sub, count_alive(sub) == p.k + 1 ? sp.pivot : -1);
        case_b(alive, sp, p.k / 2);
    }
};

}  // namespace

Drawing base_complete_odd(int k, int fan_vertex) {
    if (k < 2) throw std::invalid_argument("base_complete_odd: need k >= 2");
    if (fan_vertex < 0 || fan_vertex > 2 * k)
        throw std::invalid_argument("base_complete_odd: fan vertex out of range");
    std::vector<int> circle;
    for (int v = 0; v <= 2 * k; ++v)
        if (v != fan_vertex) circle.push_back(v);
    return base_complete_impl(circle, fan_vertex, k);
}

Drawing insert_fan_copy(const Drawing& d, const KTreeBuild& b, int fan_v, int new_w) {
    const Graph g = realize(b);
    const Graph drawn = d.graph();
    if (g.vertex_count != drawn.vertex_count || g.edges != drawn.edges)
        throw std::invalid_argument("insert_fan_copy: build does not match the drawing");
    if (new_w != g.vertex_count)
        throw std::invalid_argument("insert_fan_copy: new vertex must take the next free id");
    return insert_fan_impl(d, fan_v, new_w);
}

Drawing good_draw(const KTreeBuild& b) {
    if (b.k < 4 || b.k % 2 != 0)
        throw std::invalid_argument("good_draw: build parameter must be even and at least 4");
    const Graph g = realize(b);
    Peeler p(g, b.k);
    std::vector<bool> alive(g.vertex_count, true);
    GoodBuilder gb{p, {}};
    gb.recurse(alive, -1);
    gb.d.colour_count = b.k / 2;
    const Report r = check_good(gb.d, b);
    if (!r.passed) throw std::logic_error("good_draw: construction failed verification");
    return gb.d;
}

Drawing draw_thickness(const KTreeBuild& b) {
    if (b.k <= 2) return draw_planar_2tree(b);
    if (b.k % 2 == 0) return good_draw(b);
    const KTreeBuild lifted = ktree_lift(b);
    Drawing big = good_draw(lifted);
    const int aux = b.vertex_count();
    big.pos.erase(aux);
    for (auto it = big.colour_of.begin(); it != big.colour_of.end();) {
        if (it->first.first == aux || it->first.second == aux)
            it = big.colour_of.erase(it);
        else
            ++it;
    }
    return big;
}

}  // namespace ktdraw
