// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#include "ktdraw/geometry.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace ktdraw {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rat& s, const Point& a) { return {s * a.x, s * a.y}; }

int sign(const Rat& q) { return sgn(q); }

Rat cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

Rat cross3(const Point& p, const Point& q, const Point& r) {
    return cross(q - p, r - p);
}

Orient orientation(const Point& p, const Point& q, const Point& r) {
    const int s = sign(cross3(p, q, r));
    if (s > 0) return Orient::Left;
    if (s < 0) return Orient::Right;
    return Orient::Collinear;
}

bool collinear(const Point& p, const Point& q, const Point& r) {
    return sign(cross3(p, q, r)) == 0;
}

bool on_closed_segment(const Point& p, const Point& a, const Point& b) {
    if (!collinear(p, a, b)) return false;
    const Point d = b - a;
    const Rat dot = (p - a).x * d.x + (p - a).y * d.y;
    return sign(dot) >= 0 && dot <= d.x * d.x + d.y * d.y;
}

namespace {

// 1D closed intervals on a common line, parametrized along the dominant axis.
struct Interval {
    Rat lo, hi;
};

Interval project(const Point& a, const Point& b, bool use_x) {
    Rat pa = use_x ? a.x : a.y;
    Rat pb = use_x ? b.x : b.y;
    if (pa > pb) std::swap(pa, pb);
    return {pa, pb};
}

}  // namespace

bool segments_cross(const Point& a, const Point& b, const Point& c,
                    const Point& d) {
    assert(a != b && c != d);
    const bool cd_on_ab_line = collinear(a, b, c) && collinear(a, b, d);
    if (cd_on_ab_line) {
        // All four points on one line: contact is an interval; a positive-
        // length overlap always contains a non-endpoint shared point, while a
        // single contact point is necessarily an endpoint of both segments.
        const bool use_x = a.x != b.x;
        const Interval i1 = project(a, b, use_x);
        const Interval i2 = project(c, d, use_x);
        const Rat lo = i1.lo > i2.lo ? i1.lo : i2.lo;
        const Rat hi = i1.hi < i2.hi ? i1.hi : i2.hi;
        return lo < hi;
    }
    if (a == c || a == d || b == c || b == d) {
        // Shared endpoint and not all collinear: the two distinct carrier
        // lines meet only in that one shared point.
        return false;
    }
    const int d1 = sign(cross3(c, d, a));
    const int d2 = sign(cross3(c, d, b));
    const int d3 = sign(cross3(a, b, c));
    const int d4 = sign(cross3(a, b, d));
    if (d1 * d2 < 0 && d3 * d4 < 0) return true;
    if (d1 == 0 && on_closed_segment(a, c, d)) return true;
    if (d2 == 0 && on_closed_segment(b, c, d)) return true;
    if (d3 == 0 && on_closed_segment(c, a, b)) return true;
    if (d4 == 0 && on_closed_segment(d, a, b)) return true;
    return false;
}

Rat dist2(const Point& a, const Point& b) {
    const Point d = b - a;
    return d.x * d.x + d.y * d.y;
}

Rat point_line_dist2(const Point& p, const Point& a, const Point& b) {
    assert(a != b);
    const Rat num = cross3(a, b, p);
    return num * num / dist2(a, b);
}

Rat point_segment_dist2(const Point& p, const Point& a, const Point& b) {
    assert(a != b);
    const Point d = b - a;
    const Rat dot = (p - a).x * d.x + (p - a).y * d.y;
    if (sign(dot) <= 0) return dist2(p, a);
    const Rat len2 = d.x * d.x + d.y * d.y;
    if (dot >= len2) return dist2(p, b);
    return point_line_dist2(p, a, b);
}

bool same_direction(const Point& a, const Point& b) {
    return sign(cross(a, b)) == 0 && sign(a.x * b.x + a.y * b.y) > 0;
}

bool opposite_direction(const Point& a, const Point& b) {
    return sign(cross(a, b)) == 0 && sign(a.x * b.x + a.y * b.y) < 0;
}

namespace {

// Phase of d in the clockwise sweep starting at ref: 0 on ref's ray, 1 in the
// open half turn clockwise of ref, 2 on the opposite ray, 3 in the second
// open half turn.
int cw_phase(const Point& ref, const Point& d) {
    const int c = sign(cross(ref, d));
    if (c < 0) return 1;
    if (c > 0) return 3;
    return sign(ref.x * d.x + ref.y * d.y) > 0 ? 0 : 2;
}

}  // namespace

bool cw_before(const Point& ref, const Point& a, const Point& b) {
    const int pa = cw_phase(ref, a);
    const int pb = cw_phase(ref, b);
    if (pa != pb) return pa < pb;
    if (pa == 0 || pa == 2) return false;  // parallel: equal
    return sign(cross(a, b)) < 0;
}

bool in_open_cone(const Point& d, const Point& g1, const Point& g2) {
    const int s = sign(cross(g1, g2));
    if (s == 0) throw std::invalid_argument("in_open_cone: degenerate cone");
    return sign(cross(g1, d)) == s && sign(cross(d, g2)) == s;
}

bool in_closed_cone(const Point& d, const Point& g1, const Point& g2) {
    const int s = sign(cross(g1, g2));
    if (s == 0) throw std::invalid_argument("in_closed_cone: degenerate cone");
    const int c1 = sign(cross(g1, d));
    const int c2 = sign(cross(d, g2));
    if (c1 != 0 && c1 != s) return false;
    if (c2 != 0 && c2 != s) return false;
    // Both on-boundary zeros would mean d = 0 or the cone degenerate.
    if (c1 == 0 && sign(g1.x * d.x + g1.y * d.y) <= 0) return false;
    if (c2 == 0 && sign(g2.x * d.x + g2.y * d.y) <= 0) return false;
    return true;
}

Rat pow2(long e) {
    Rat r(1);
    if (e >= 0) {
        mpz_class num(1);
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), e);
        r = Rat(num);
    } else {
        mpz_class den(1);
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), -e);
        r = Rat(1) / Rat(den);
    }
    return r;
}

Rat dyadic_below(const Rat& x) {
    if (sign(x) <= 0) throw std::invalid_argument("dyadic_below: x must be positive");
    Rat c(1);
    if (x >= 1) {
        while (2 * c <= x) c *= 2;
    } else {
        while (c > x) c /= 2;
    }
    return c;
}

Rat round_to_grid(const Rat& v, unsigned long t) {
    const Rat scale = pow2(static_cast<long>(t));
    Rat shifted = v * scale + Rat(1, 2);
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num().get_mpz_t(),
               shifted.get_den().get_mpz_t());
    return Rat(fl) / scale;
}

Point round_to_grid(const Point& p, unsigned long t) {
    return {round_to_grid(p.x, t), round_to_grid(p.y, t)};
}

}  // namespace ktdraw
