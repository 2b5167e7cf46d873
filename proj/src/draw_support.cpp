// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#include <algorithm>
#include <stdexcept>

#include "draw_internal.hpp"
#include "ktdraw/draw.hpp"

namespace ktdraw {

std::vector<int> Drawing::vertices() const {
    std::vector<int> out;
    out.reserve(pos.size());
    for (const auto& [v, p] : pos) out.push_back(v);
    return out;
}

Graph Drawing::graph() const {
    Graph g;
    int maxv = -1;
    for (const auto& [v, p] : pos) maxv = std::max(maxv, v);
    g.vertex_count = maxv + 1;
    for (const auto& [e, c] : colour_of) g.edges.insert(e);
    return g;
}

RayFan ray_fan(const Drawing& d, int v) {
    if (!d.pos.count(v)) throw std::invalid_argument("ray_fan: unknown vertex");
    std::vector<int> nb;
    for (const auto& [e, c] : d.colour_of) {
        if (e.first == v) nb.push_back(e.second);
        if (e.second == v) nb.push_back(e.first);
    }
    if (nb.empty()) throw std::invalid_argument("ray_fan: isolated vertex");
    std::sort(nb.begin(), nb.end());

    struct Entry {
        Point dir;
        int u;
        bool opp;
    };
    const Point pv = d.pos.at(v);
    std::vector<Entry> entries;
    for (int u : nb) {
        const Point dir = d.pos.at(u) - pv;
        entries.push_back({dir, u, false});
        entries.push_back({Point{-dir.x, -dir.y}, u, true});
    }
    const Point ref = entries.front().dir;
    std::stable_sort(entries.begin(), entries.end(),
                     [&](const Entry& a, const Entry& b) { return cw_before(ref, a.dir, b.dir); });

    RayFan fan;
    fan.centre = v;
    for (const Entry& e : entries) fan.rays.push_back({e.u, e.opp});
    return fan;
}

namespace {

// Exponent bounds from limb sizes alone: 2^floor_bound < |q| <= 2^ceil_bound
// for q != 0.  Two size queries, no arithmetic — these let the feature sweeps
// below reject almost every candidate without touching the big numerators.
long log2_floor_bound(const Rat& q) {
    return static_cast<long>(mpz_sizeinbase(mpq_numref(q.get_mpq_t()), 2)) -
           static_cast<long>(mpz_sizeinbase(mpq_denref(q.get_mpq_t()), 2)) - 1;
}

long log2_ceil_bound(const Rat& q) {
    return static_cast<long>(mpz_sizeinbase(mpq_numref(q.get_mpq_t()), 2)) -
           static_cast<long>(mpz_sizeinbase(mpq_denref(q.get_mpq_t()), 2)) + 1;
}

// Running minimum of positive rational features, stored as num/den so no
// canonicalizing division happens per feature.  Callers screen with
// may_improve(floor bound of the candidate) before paying for exact products.
struct MinTracker {
    bool have = false;
    Rat num, den;
    long ceil_bound = 0;

    bool may_improve(long cand_floor) const { return !have || cand_floor <= ceil_bound; }

    void feed_ratio(const Rat& n, const Rat& d) {
        if (have && !(n * den < num * d)) return;
        num = n;
        den = d;
        ceil_bound = log2_ceil_bound(n) - log2_floor_bound(d);
        have = true;
    }

    void feed(const Rat& v) {
        if (have && !(v * den < num)) return;
        num = v;
        den = 1;
        ceil_bound = log2_ceil_bound(v);
        have = true;
    }

    Rat value() const { return num / den; }
};

}  // namespace

namespace detail {

Rat dyadic_sqrt_below(const Rat& x) {
    if (sign(x) <= 0) throw std::invalid_argument("dyadic_sqrt_below: x must be positive");
    // x > 2^fb, so 2^floor(fb/2) squared stays below x; within two bits of
    // the true square root, which is all the callers rely on.
    const long fb = log2_floor_bound(x);
    const long half = fb >= 0 ? fb / 2 : -((-fb + 1) / 2);
    return pow2(half);
}

namespace {

Point snap_search(const Point& witness, const std::function<bool(const Point&)>& pred) {
    // Find a passing grid exponent by climbing, then binary-search down to
    // (nearly) the smallest one that still passes.  Returning the coarsest
    // admissible grid matters: constructions snap points level by level, and
    // any excess precision kept here is inherited by every later level.
    constexpr unsigned long kMaxExp = 1ul << 22;
    unsigned long hi = 16;
    while (!pred(round_to_grid(witness, hi))) {
        hi *= 4;
        if (hi > kMaxExp)
            throw std::logic_error("snap_to_grid_accept: no acceptable grid point");
    }
    unsigned long lo = hi / 4;  // hi passes; everything at or below lo is untested or failed
    while (hi - lo > 8) {  // within 8 bits of minimal is close enough
        const unsigned long mid = lo + (hi - lo) / 2;
        if (pred(round_to_grid(witness, mid)))
            hi = mid;
        else
            lo = mid;
    }
    return round_to_grid(witness, hi);
}

}  // namespace

Point snap_to_grid_accept(const Point& witness,
                          const std::function<bool(const Point&)>& pred) {
    return snap_search(witness, pred);
}

Point snap_to_grid_accept(const Point& witness,
                          const std::function<bool(const Point&)>& region,
                          const std::function<bool(const Point&)>& full) {
    // Search on the cheap necessary tests, then confirm the winner with the
    // full predicate once; a grid point passing the region tests but failing
    // the full ones (a chance degeneracy) forces a full re-search.
    const Point p = snap_search(witness, region);
    if (full(p)) return p;
    return snap_search(witness, full);
}

bool extends_general_position(const std::vector<Point>& pts, const Point& p) {
    for (size_t i = 0; i < pts.size(); ++i) {
        if (p == pts[i]) return false;
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (collinear(pts[i], pts[j], p)) return false;
    }
    return true;
}

std::vector<Point> all_points(const Drawing& d) {
    std::vector<Point> pts;
    pts.reserve(d.pos.size());
    for (const auto& [v, p] : d.pos) pts.push_back(p);
    return pts;
}

namespace {

struct EpsContext {
    const Drawing& d;
    int v;
    Point pv;
    std::vector<std::pair<int, Point>> others;
    std::vector<Edge> non_incident;
    std::vector<int> neighbours;
};

EpsContext make_context(const Drawing& d, int v) {
    if (!d.pos.count(v)) throw std::invalid_argument("epsilon_empty: unknown vertex");
    EpsContext ctx{d, v, d.pos.at(v), {}, {}, {}};
    for (const auto& [u, p] : d.pos)
        if (u != v) ctx.others.push_back({u, p});
    for (const auto& [e, c] : d.colour_of) {
        if (e.first == v)
            ctx.neighbours.push_back(e.second);
        else if (e.second == v)
            ctx.neighbours.push_back(e.first);
        else
            ctx.non_incident.push_back(e);
    }
    return ctx;
}

// The four defining properties, as strict exact sufficient conditions:
// (i) v farther than eps from every line through two other vertices — makes
//     every orientation sign involving a disc point constant, so general
//     position and the radial order of N(v) are preserved on the whole disc;
// (ii) non-incident edges farther than eps from v;
// (iii) other vertices farther than eps from v;
// (iv) all other vertices farther than eps from each segment [v,u], u in
//      N(v) — the sight cone from u into the disc lies in that stadium.
bool eps_accepted(const EpsContext& ctx, const Rat& eps) {
    const Rat e2 = eps * eps;
    const long e2_ceil = log2_ceil_bound(e2);
    // q > e2, settled by exponent bounds when possible
    auto val_ok = [&](const Rat& q) {
        if (sign(q) == 0) return false;
        return log2_floor_bound(q) >= e2_ceil || q > e2;
    };
    // cr^2 / len2 > e2 without the division
    auto line_ok = [&](const Rat& cr, const Rat& len2) {
        if (sign(cr) == 0) return false;
        if (2 * log2_floor_bound(cr) - log2_ceil_bound(len2) >= e2_ceil) return true;
        return cr * cr > e2 * len2;
    };
    // point-segment distance is at least the point-line distance, so a
    // passing line bound settles the segment feature too
    auto seg_ok = [&](const Point& p, const Point& a, const Point& b, const Rat& len2) {
        const Rat cr = cross3(a, b, p);
        if (sign(cr) != 0 && 2 * log2_floor_bound(cr) - log2_ceil_bound(len2) >= e2_ceil)
            return true;
        return point_segment_dist2(p, a, b) > e2;
    };
    for (size_t i = 0; i < ctx.others.size(); ++i) {
        if (!val_ok(dist2(ctx.pv, ctx.others[i].second))) return false;
        for (size_t j = i + 1; j < ctx.others.size(); ++j)
            if (!line_ok(cross3(ctx.others[i].second, ctx.others[j].second, ctx.pv),
                         dist2(ctx.others[i].second, ctx.others[j].second)))
                return false;
    }
    for (const Edge& e : ctx.non_incident) {
        const Point &pa = ctx.d.pos.at(e.first), &pb = ctx.d.pos.at(e.second);
        if (!seg_ok(ctx.pv, pa, pb, dist2(pa, pb))) return false;
    }
    for (int u : ctx.neighbours) {
        const Point pu = ctx.d.pos.at(u);
        const Rat len2 = dist2(ctx.pv, pu);
        for (const auto& [x, px] : ctx.others) {
            if (x == u) continue;
            if (!seg_ok(px, ctx.pv, pu, len2)) return false;
        }
    }
    return true;
}

Rat eps_candidate(const EpsContext& ctx) {
    MinTracker mt;
    auto feed_val = [&](const Rat& q) {
        if (sign(q) == 0)
            throw std::invalid_argument("epsilon_empty: drawing not in general position");
        if (mt.may_improve(log2_floor_bound(q))) mt.feed(q);
    };
    // exact distance to a line as cr^2/len2; also a lower bound for the
    // matching segment feature, evaluated exactly only when it could bind
    auto feed_seg = [&](const Point& p, const Point& a, const Point& b, const Rat& len2) {
        const Rat cr = cross3(a, b, p);
        if (sign(cr) == 0 ||
            mt.may_improve(2 * log2_floor_bound(cr) - log2_ceil_bound(len2)))
            feed_val(point_segment_dist2(p, a, b));
    };
    for (size_t i = 0; i < ctx.others.size(); ++i) {
        feed_val(dist2(ctx.pv, ctx.others[i].second));
        for (size_t j = i + 1; j < ctx.others.size(); ++j) {
            if (ctx.others[i].second == ctx.others[j].second)
                throw std::invalid_argument("epsilon_empty: coincident vertex positions");
            const Rat cr = cross3(ctx.others[i].second, ctx.others[j].second, ctx.pv);
            if (sign(cr) == 0)
                throw std::invalid_argument("epsilon_empty: drawing not in general position");
            const Rat len2 = dist2(ctx.others[i].second, ctx.others[j].second);
            if (mt.may_improve(2 * log2_floor_bound(cr) - log2_ceil_bound(len2)))
                mt.feed_ratio(cr * cr, len2);
        }
    }
    for (const Edge& e : ctx.non_incident) {
        const Point &pa = ctx.d.pos.at(e.first), &pb = ctx.d.pos.at(e.second);
        feed_seg(ctx.pv, pa, pb, dist2(pa, pb));
    }
    for (int u : ctx.neighbours) {
        const Point pu = ctx.d.pos.at(u);
        const Rat len2 = dist2(ctx.pv, pu);
        for (const auto& [x, px] : ctx.others) {
            if (x == u) continue;
            feed_seg(px, ctx.pv, pu, len2);
        }
    }
    if (!mt.have) return Rat(1);
    return dyadic_sqrt_below(mt.value()) / 2;
}

Rat eps_core(const Drawing& d, int v) {
    const EpsContext ctx = make_context(d, v);
    Rat eps = eps_candidate(ctx);
    for (int iter = 0; iter < 256; ++iter) {
        if (eps_accepted(ctx, eps)) return eps;
        eps /= 2;
    }
    throw std::logic_error("epsilon_empty: verifier failed to accept");
}

}  // namespace

Rat epsilon_empty_unchecked(const Drawing& d, int v) { return eps_core(d, v); }

}  // namespace detail

Rat epsilon_empty(const Drawing& d, int v) {
    const auto pts = detail::all_points(d);
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j])
                throw std::invalid_argument("epsilon_empty: coincident vertex positions");
            for (size_t l = j + 1; l < pts.size(); ++l)
                if (collinear(pts[i], pts[j], pts[l]))
                    throw std::invalid_argument("epsilon_empty: drawing not in general position");
        }
    return detail::eps_core(d, v);
}

namespace detail {

PerturbationSweep::PerturbationSweep(const std::map<int, Point>& pos) {
    for (const auto& [v, p] : pos) pts_.push_back({v, p});
    const size_t n = pts_.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (pts_[i].second == pts_[j].second)
                throw std::invalid_argument("perturbation_radius: coincident vertex positions");
    if (n < 2) return;

    for (size_t i = 0; i < n; ++i) idx_[pts_[i].first] = i;

    // Cached squared distances for the sweeps below.
    d2_.assign(n, std::vector<Rat>(n));
    MinTracker mt_pair;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            d2_[i][j] = d2_[j][i] = dist2(pts_[i].second, pts_[j].second);
            if (mt_pair.may_improve(log2_floor_bound(d2_[i][j]))) mt_pair.feed(d2_[i][j]);
        }

    // Minimum squared altitude over non-collinear triples, underestimated as
    // (2 area)^2 over the sum of the squared sides: the sum bounds the
    // longest side within a factor 3, and needs no side comparisons.
    MinTracker mt_alt;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t l = j + 1; l < n; ++l) {
                const Rat cr = cross3(pts_[i].second, pts_[j].second, pts_[l].second);
                if (sign(cr) == 0) continue;
                const Rat sum = d2_[i][j] + d2_[j][l] + d2_[i][l];
                if (mt_alt.may_improve(2 * log2_floor_bound(cr) - log2_ceil_bound(sum)))
                    mt_alt.feed_ratio(cr * cr, sum);
            }

    Rat eps = dyadic_sqrt_below(mt_pair.value()) / 2;
    if (mt_alt.have) {
        const Rat tri = dyadic_sqrt_below(mt_alt.value()) / 4;
        if (tri < eps) eps = tri;
    }

    auto accepted = [&](const Rat& radius) {
        const Rat r4 = Rat(4) * radius * radius;
        const long r4_ceil = log2_ceil_bound(r4);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                if (log2_floor_bound(d2_[i][j]) >= r4_ceil) continue;
                if (!(d2_[i][j] > r4)) return false;
            }
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j)
                for (size_t l = j + 1; l < n; ++l) {
                    const Rat cr = cross3(pts_[i].second, pts_[j].second, pts_[l].second);
                    if (sign(cr) == 0) continue;
                    const Rat sum = d2_[i][j] + d2_[j][l] + d2_[i][l];
                    if (2 * log2_floor_bound(cr) - log2_ceil_bound(sum) >= r4_ceil) continue;
                    if (!(cr * cr > r4 * sum)) return false;
                }
        return true;
    };

    for (int iter = 0; iter < 256; ++iter) {
        if (accepted(eps)) {
            base_radius_ = eps;
            return;
        }
        eps /= 2;
    }
    throw std::logic_error("perturbation_radius: verifier failed to accept");
}

Rat PerturbationSweep::layer_radius(const std::vector<Edge>& edges) const {
    auto at = [&](int v) -> const Point& { return pts_[idx_.at(v)].second; };
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j)
            if (segments_cross(at(edges[i].first), at(edges[i].second), at(edges[j].first),
                               at(edges[j].second)))
                throw std::invalid_argument("perturbation_radius: input drawing has a crossing");
    return layer_radius_unchecked(edges);
}

Rat PerturbationSweep::layer_radius_unchecked(const std::vector<Edge>& edges) const {
    auto at = [&](int v) -> const Point& { return pts_[idx_.at(v)].second; };
    if (pts_.size() < 2) return Rat(1);

    std::map<int, int> degree;
    for (const Edge& e : edges) {
        ++degree[e.first];
        ++degree[e.second];
    }

    // Minimum squared distance from a bound vertex to a non-incident edge.
    // This also covers edge pairs: for disjoint noncrossing segments the
    // segment-segment distance is attained at one of the four endpoints.
    MinTracker mt_pe;
    for (const auto& [z, pz] : pts_) {
        if (!degree.count(z)) continue;  // isolated vertices bind nothing
        for (const Edge& f : edges) {
            if (f.first == z || f.second == z) continue;
            const Point &pa = at(f.first), &pb = at(f.second);
            const Rat& len2 = d2_[idx_.at(f.first)][idx_.at(f.second)];
            const Rat cr = cross3(pa, pb, pz);
            if (sign(cr) != 0 &&
                !mt_pe.may_improve(2 * log2_floor_bound(cr) - log2_ceil_bound(len2)))
                continue;
            const Rat q = point_segment_dist2(pz, pa, pb);
            if (sign(q) == 0)
                throw std::invalid_argument(
                    "perturbation_radius: vertex lies on a non-incident edge");
            if (mt_pe.may_improve(log2_floor_bound(q))) mt_pe.feed(q);
        }
    }

    // The pair and altitude checks passed at base_radius_ and are of the
    // form feature > 4 radius^2, monotone in the radius, so only the edge
    // features need verification here.
    Rat eps = base_radius_;
    if (mt_pe.have) {
        const Rat pe = dyadic_sqrt_below(mt_pe.value()) / 4;
        if (pe < eps) eps = pe;
    }

    auto accepted = [&](const Rat& radius) {
        const Rat r4 = Rat(4) * radius * radius;
        const long r4_ceil = log2_ceil_bound(r4);
        for (const auto& [z, pz] : pts_) {
            if (!degree.count(z)) continue;
            for (const Edge& f : edges) {
                if (f.first == z || f.second == z) continue;
                const Point &pa = at(f.first), &pb = at(f.second);
                const Rat cr = cross3(pa, pb, pz);
                if (sign(cr) != 0 &&
                    2 * log2_floor_bound(cr) -
                            log2_ceil_bound(d2_[idx_.at(f.first)][idx_.at(f.second)]) >=
                        r4_ceil)
                    continue;
                if (!(point_segment_dist2(pz, pa, pb) > r4)) return false;
            }
        }
        return true;
    };

    for (int iter = 0; iter < 256; ++iter) {
        if (accepted(eps)) return eps;
        eps /= 2;
    }
    throw std::logic_error("perturbation_radius: verifier failed to accept");
}

}  // namespace detail

Rat perturbation_radius(const Drawing& d) {
    const detail::PerturbationSweep sweep(d.pos);
    std::vector<Edge> edges;
    for (const auto& [e, c] : d.colour_of) edges.push_back(e);
    return sweep.layer_radius(edges);
}

}  // namespace ktdraw
