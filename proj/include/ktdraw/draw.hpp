// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#pragma once

#include "ktdraw/geometry.hpp"
#include "ktdraw/graph.hpp"

namespace ktdraw {

// Straight-line drawing: exact positions plus a 1-based colour per edge.
// The edge set of the drawn graph is exactly the key set of colour_of.
struct Drawing {
    std::map<int, Point> pos;
    EdgeColouring colour_of;
    int colour_count = 0;

    std::vector<int> vertices() const;
    Graph graph() const;
};

// The 4k rays {ray(v,u), oray(v,u) : u neighbour of v} in clockwise order;
// each entry names the neighbour and whether it is the opposite ray.
struct RayFan {
    int centre = -1;
    std::vector<std::pair<int, bool>> rays;
};

RayFan ray_fan(const Drawing& d, int v);

// Largest accepted radius (a power of two) such that the open disc around v
// is empty in the strong sense: the sight cones from v's neighbours contain
// no other vertex, non-incident edges stay outside, and every point of the
// disc sees the same general position and the same radial order of N(v).
Rat epsilon_empty(const Drawing& d, int v);

// Radius (a power of two) within which every per-vertex displacement keeps
// the drawing noncrossing and creates no new collinear triple.  The input is
// treated as a single layer: all edges of d, whatever their colour.
Rat perturbation_radius(const Drawing& d);

// The K_{2k+1} base drawing: 2k vertices on the unit circle in antipodal
// pairs, zig-zag colouring, fan_vertex placed next to the centre so that it
// becomes a fan.
Drawing base_complete_odd(int k, int fan_vertex);

// Inserts new_w onto the neighbourhood of the fan fan_v (new_w is adjacent to
// every neighbour of fan_v but not to fan_v itself), preserving goodness.
// b must be the build of d's graph; new_w must be the next free vertex id.
Drawing insert_fan_copy(const Drawing& d, const KTreeBuild& b, int fan_v, int new_w);

// Noncrossing one-colour drawing of a tree or 2-tree, each simplicial vertex
// placed inside an empty disc near its parent edge midpoint (or parent
// vertex for trees).
Drawing draw_planar_2tree(const KTreeBuild& b);

// k colour classes, each a noncrossing forest, simplicial vertices colourful.
Drawing draw_forests(const KTreeBuild& b);

// Good drawing of a 2k-tree: general position, k = half the build parameter
// colour classes, each noncrossing, every 2k-simplicial vertex a fan.
Drawing good_draw(const KTreeBuild& b);

// ceil(k/2) noncrossing colour classes for any k-tree: direct for k <= 2,
// via good_draw for even k, via ktree_lift then good_draw restricted to the
// original edges for odd k >= 3.
Drawing draw_thickness(const KTreeBuild& b);

}  // namespace ktdraw
