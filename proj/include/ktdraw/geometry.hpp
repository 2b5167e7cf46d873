// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

namespace ktdraw {

// All coordinates are exact rationals; nothing in the library ever compares
// floating-point values. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every operation.
using Rat = mpq_class;

struct Point {
    Rat x;
    Rat y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rat& s, const Point& a);

enum class Orient { Left, Right, Collinear };

int sign(const Rat& q);

// 2D cross product of direction vectors a, b.
Rat cross(const Point& a, const Point& b);

// Cross product of (q-p) and (r-p); positive means r lies left of line p->q.
Rat cross3(const Point& p, const Point& q, const Point& r);

Orient orientation(const Point& p, const Point& q, const Point& r);

bool collinear(const Point& p, const Point& q, const Point& r);

// True iff p lies on the closed segment [a,b] (endpoints included).
bool on_closed_segment(const Point& p, const Point& a, const Point& b);

// Closed segments [a,b] and [c,d] share a point that is not a shared endpoint
// of the two segments.  Touching counts; collinear overlap counts; meeting
// exactly at an endpoint common to both does not.  Endpoints must be distinct
// within each segment.
bool segments_cross(const Point& a, const Point& b, const Point& c,
                    const Point& d);

Rat dist2(const Point& a, const Point& b);

// Squared distance from p to the line through distinct points a, b.
Rat point_line_dist2(const Point& p, const Point& a, const Point& b);

// Squared distance from p to the closed segment [a,b].
Rat point_segment_dist2(const Point& p, const Point& a, const Point& b);

// --- direction (ray) utilities -------------------------------------------
// Directions are nonzero vectors; only their ray matters.

bool same_direction(const Point& a, const Point& b);
bool opposite_direction(const Point& a, const Point& b);

// Strict weak order for sweeping clockwise starting at direction ref:
// true iff a is reached strictly before b.  Directions equal to ref come
// first.  Parallel directions compare equal.
bool cw_before(const Point& ref, const Point& a, const Point& b);

// Membership of direction d in the cone positively spanned by g1, g2.
// Requires cross(g1,g2) != 0; the cone then spans less than a half turn and
// equals the lesser-angle wedge between the two rays.
bool in_open_cone(const Point& d, const Point& g1, const Point& g2);
bool in_closed_cone(const Point& d, const Point& g1, const Point& g2);

// --- dyadic helpers -------------------------------------------------------

// 2^e as a rational; e may be negative.
Rat pow2(long e);

// Largest power of two that is <= x; requires x > 0.
Rat dyadic_below(const Rat& x);

// Round to the nearest multiple of 2^-t (ties rounded down).
Rat round_to_grid(const Rat& v, unsigned long t);
Point round_to_grid(const Point& p, unsigned long t);

}  // namespace ktdraw
