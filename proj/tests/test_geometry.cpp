#include "ktdraw/geometry.hpp"

#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace ktdraw;

namespace {

Point pt(long x, long y) { return {Rat(x), Rat(y)}; }

Point random_point(std::mt19937_64& rng) {
    const long range = 41;
    return {Rat(static_cast<long>(testsupport::uniform_below(rng, range)) - 20,
                1 + static_cast<long>(testsupport::uniform_below(rng, 4))),
            Rat(static_cast<long>(testsupport::uniform_below(rng, range)) - 20,
                1 + static_cast<long>(testsupport::uniform_below(rng, 4)))};
}

}  // namespace

TEST_CASE("orientation on the axis triangle") {
    CHECK(orientation(pt(0, 0), pt(1, 0), pt(0, 1)) == Orient::Left);
    CHECK(orientation(pt(0, 0), pt(0, 1), pt(1, 0)) == Orient::Right);
    CHECK(orientation(pt(0, 0), pt(1, 1), pt(2, 2)) == Orient::Collinear);
}

TEST_CASE("orientation flips when the last two points swap") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const Point p = random_point(rng), q = random_point(rng), r = random_point(rng);
        const Orient o1 = orientation(p, q, r);
        const Orient o2 = orientation(p, r, q);
        if (o1 == Orient::Collinear)
            CHECK(o2 == Orient::Collinear);
        else
            CHECK(o2 == (o1 == Orient::Left ? Orient::Right : Orient::Left));
    }
}

TEST_CASE("on_closed_segment includes endpoints, excludes the outside") {
    CHECK(on_closed_segment(pt(0, 0), pt(0, 0), pt(2, 0)));
    CHECK(on_closed_segment(pt(1, 0), pt(0, 0), pt(2, 0)));
    CHECK(on_closed_segment(pt(2, 0), pt(0, 0), pt(2, 0)));
    CHECK_FALSE(on_closed_segment(pt(3, 0), pt(0, 0), pt(2, 0)));
    CHECK_FALSE(on_closed_segment(pt(1, 1), pt(0, 0), pt(2, 0)));
}

TEST_CASE("segments_cross cases") {
    // Proper crossing at (1,1).
    CHECK(segments_cross(pt(0, 0), pt(2, 2), pt(0, 2), pt(2, 0)));
    // Shared endpoint only.
    CHECK_FALSE(segments_cross(pt(0, 0), pt(1, 0), pt(1, 0), pt(2, 1)));
    // Collinear overlap counts.
    CHECK(segments_cross(pt(0, 0), pt(2, 0), pt(1, 0), pt(3, 0)));
    // Collinear but disjoint does not.
    CHECK_FALSE(segments_cross(pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0)));
    // Touching - an endpoint in the other segment's interior - counts.
    CHECK(segments_cross(pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 1)));
    // Fully disjoint.
    CHECK_FALSE(segments_cross(pt(0, 0), pt(1, 0), pt(0, 1), pt(1, 1)));
}

TEST_CASE("segments_cross is symmetric and orientation free") {
    std::mt19937_64 rng(12);
    int crossings = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Point a = random_point(rng), b = random_point(rng);
        const Point c = random_point(rng), d = random_point(rng);
        if (a == b || c == d) continue;
        const bool x = segments_cross(a, b, c, d);
        crossings += x;
        CHECK(segments_cross(c, d, a, b) == x);
        CHECK(segments_cross(b, a, c, d) == x);
        CHECK(segments_cross(a, b, d, c) == x);
    }
    CHECK(crossings > 0);  // the sample actually exercises both outcomes
}

TEST_CASE("distance helpers give exact squared values") {
    CHECK(dist2(pt(0, 0), pt(3, 4)) == Rat(25));
    // Distance from the right-angle corner to the hypotenuse of the
    // (0,0),(4,0),(0,4) triangle: 8 = (4/sqrt(2))^2.
    CHECK(point_line_dist2(pt(0, 0), pt(4, 0), pt(0, 4)) == Rat(8));
    // Projection falls outside the segment: nearest point is an endpoint.
    CHECK(point_segment_dist2(pt(5, 1), pt(0, 0), pt(4, 0)) == Rat(2));
    CHECK(point_segment_dist2(pt(2, 3), pt(0, 0), pt(4, 0)) == Rat(9));
}

TEST_CASE("direction predicates") {
    CHECK(same_direction(pt(2, 4), pt(1, 2)));
    CHECK_FALSE(same_direction(pt(2, 4), pt(-1, -2)));
    CHECK(opposite_direction(pt(2, 4), pt(-1, -2)));
    CHECK_FALSE(opposite_direction(pt(2, 4), pt(1, 2)));
    CHECK_FALSE(same_direction(pt(1, 0), pt(0, 1)));
}

TEST_CASE("cw_before sweeps clockwise from the reference ray") {
    const Point ref = pt(0, 1);
    // Clockwise from straight up: (1,1) before (1,-1) before (0,-1) before (-1,0).
    CHECK(cw_before(ref, pt(1, 1), pt(1, -1)));
    CHECK(cw_before(ref, pt(1, -1), pt(0, -1)));
    CHECK(cw_before(ref, pt(0, -1), pt(-1, 0)));
    CHECK_FALSE(cw_before(ref, pt(-1, 0), pt(1, 1)));
    // The reference direction itself comes first.
    CHECK(cw_before(ref, pt(0, 2), pt(1, 1)));
    // Parallel directions compare equal in both directions.
    CHECK_FALSE(cw_before(ref, pt(1, 1), pt(2, 2)));
    CHECK_FALSE(cw_before(ref, pt(2, 2), pt(1, 1)));
}

TEST_CASE("cone membership") {
    const Point g1 = pt(1, 0), g2 = pt(0, 1);
    CHECK(in_open_cone(pt(1, 1), g1, g2));
    CHECK_FALSE(in_open_cone(pt(1, 0), g1, g2));  // boundary is excluded
    CHECK(in_closed_cone(pt(1, 0), g1, g2));
    CHECK_FALSE(in_open_cone(pt(-1, 1), g1, g2));
    CHECK_FALSE(in_closed_cone(pt(-1, -1), g1, g2));
}

TEST_CASE("pow2 and dyadic_below") {
    CHECK(pow2(3) == Rat(8));
    CHECK(pow2(0) == Rat(1));
    CHECK(pow2(-2) == Rat(1, 4));
    CHECK(dyadic_below(Rat(3)) == Rat(2));
    CHECK(dyadic_below(Rat(1)) == Rat(1));
    CHECK(dyadic_below(Rat(1, 3)) == Rat(1, 4));
    CHECK(dyadic_below(Rat(5, 2)) == Rat(2));
}

TEST_CASE("round_to_grid lands on the grid near the input") {
    CHECK(round_to_grid(Rat(1, 3), 2ul) == Rat(1, 4));
    CHECK(round_to_grid(Rat(-1, 3), 2ul) == Rat(-1, 4));
    CHECK(round_to_grid(Rat(7), 4ul) == Rat(7));
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const Point p = random_point(rng);
        const unsigned long t = 1 + testsupport::uniform_below(rng, 10);
        const Point q = round_to_grid(p, t);
        const Rat step = pow2(static_cast<long>(t));
        CHECK((q.x * step).get_den() == 1);  // exactly on the grid
        CHECK((q.y * step).get_den() == 1);
        CHECK(dist2(p, q) <= Rat(1, 2) / step / step);  // within half a cell
    }
}

TEST_CASE("point arithmetic stays rational and exact") {
    const Point a{Rat(1, 3), Rat(2, 7)};
    const Point b{Rat(1, 6), Rat(3, 7)};
    CHECK((a + b).x == Rat(1, 2));
    CHECK((a - b).y == Rat(-1, 7));
    CHECK((Rat(3) * a).x == Rat(1));
    CHECK(cross(pt(1, 0), pt(0, 1)) == Rat(1));
    CHECK(cross3(pt(1, 1), pt(2, 1), pt(1, 5)) == Rat(4));
}
