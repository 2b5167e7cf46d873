// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "ktdraw/draw.hpp"

// Shared internals of the drawing constructions; not part of the public API.
namespace ktdraw::detail {

// A power of two whose square is <= x, within two bits of sqrt(x); requires
// x > 0.
Rat dyadic_sqrt_below(const Rat& x);

// Rounds witness to the coarsest dyadic grid pred accepts (up to a few bits);
// pred must accept an open neighbourhood of witness.
Point snap_to_grid_accept(const Point& witness,
                          const std::function<bool(const Point&)>& pred);

// Same, but searches with the cheap necessary tests in region and confirms
// the final point with full (which must imply region); probes during the
// search then skip the expensive checks.
Point snap_to_grid_accept(const Point& witness,
                          const std::function<bool(const Point&)>& region,
                          const std::function<bool(const Point&)>& full);

// Position-dependent half of perturbation_radius, shared across the colour
// layers of one drawing: the quadratic pair sweep and the cubic altitude
// sweep run once here, and each layer then pays only for its own edges.
class PerturbationSweep {
  public:
    explicit PerturbationSweep(const std::map<int, Point>& pos);
    // Radius for one layer; equals perturbation_radius of the drawing with
    // these positions and edges.
    Rat layer_radius(const std::vector<Edge>& edges) const;
    // Same without the noncrossing prevalidation, for layers a construction
    // maintains noncrossing itself (and re-verifies at the end).
    Rat layer_radius_unchecked(const std::vector<Edge>& edges) const;

  private:
    std::vector<std::pair<int, Point>> pts_;
    std::map<int, size_t> idx_;
    std::vector<std::vector<Rat>> d2_;
    Rat base_radius_{1};
};

// True iff p is collinear with no pair of distinct points in pts.
bool extends_general_position(const std::vector<Point>& pts, const Point& p);

// epsilon_empty without the full general-position precondition sweep; for
// use inside constructions that maintain general position incrementally.
Rat epsilon_empty_unchecked(const Drawing& d, int v);

// Collects the positions of all vertices of d.
std::vector<Point> all_points(const Drawing& d);

}  // namespace ktdraw::detail
