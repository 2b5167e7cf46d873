// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#pragma once

#include <optional>

#include "ktdraw/book.hpp"
#include "ktdraw/draw.hpp"
#include "ktdraw/graph.hpp"

namespace ktdraw {

struct Violation {
    std::string kind;
    std::vector<int> vertices;
    std::string detail;
};

struct Report {
    bool passed = true;
    std::vector<Violation> violations;

    void fail(std::string kind, std::vector<int> vertices, std::string detail);
};

enum class LayerMode { Noncrossing, Forest, StarForest };

// Per-page checks of a book embedding against its graph: page coverage, no
// in-page crossing pair, and the per-mode class property.
Report check_book(const BookEmbedding& emb, const Graph& g, LayerMode mode);

// Per-colour checks of a straight-line drawing: coverage, exact general
// position, no same-colour crossing, and the per-mode class property.
Report check_drawing_layers(const Drawing& d, const Graph& g, LayerMode mode);

// True iff all edges incident to v carry pairwise distinct colours.
bool check_colourful(const EdgeColouring& colouring, int v);

// If v (of even degree 2k) is a fan, returns the labelling of N(v) by signed
// indices {+-1..+-k}: clockwise around v the 4k rays pair up consecutively as
// (ray toward u_i, opposite ray of u_{-i}) and edge v u_i has colour |i|.
std::optional<std::map<int, int>> fan_labels(const Drawing& d, int v);

bool check_fan(const Drawing& d, int v);

// Good-drawing predicate for the realized graph of b (parameter 2k): general
// position, k-colour noncrossing layers, and the fan condition on every
// 2k-simplicial vertex (at least one vertex when the graph is K_{2k+1}).
Report check_good(const Drawing& d, const KTreeBuild& b);

// max over induced subgraphs H with >= 2 vertices of ceil(|E(H)|/(|V(H)|-1)).
int nash_williams(const Graph& g);

struct MonoWitness {
    enum class Kind { K33, K23, P4, C4 };
    Kind kind = Kind::P4;
    // K33: the two sides as 3+3; K23: 2+3; P4: path order; C4: cycle order.
    std::vector<int> vertices;
    int colour = 0;
};

// Every returned witness is structurally revalidated against the host graph
// and the colouring before being handed back.

// A monochromatic K_{3,3} in any <= l-colouring of the complete split graph
// K*_{k,s}; requires k >= 3, 1 <= l <= ceil(k/2)-1, ceil(k/l) >= 3 and
// s >= 2*l^k + 1.
MonoWitness refute_thickness(int k, int l, int s, const EdgeColouring& colouring);

// A monochromatic K_{2,3} in any <= l-colouring of K*_{k,s}; requires
// k >= 2, 1 <= l <= k-1 and s >= 2*l^k + 1.
MonoWitness refute_outerthickness(int k, int l, int s, const EdgeColouring& colouring);

// A monochromatic P_4 or C_4 in any <= k-colouring of star_lb_graph(k).
MonoWitness refute_star_arboricity(int k, const EdgeColouring& colouring);

}  // namespace ktdraw
