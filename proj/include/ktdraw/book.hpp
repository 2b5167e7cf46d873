// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#pragma once

#include "ktdraw/graph.hpp"

namespace ktdraw {

// A book embedding: a cyclic vertex order (list order read clockwise) plus a
// 1-based page per edge.
struct BookEmbedding {
    std::vector<int> order;
    EdgeColouring page_of;
    int page_count = 0;
};

// True iff e and f share no endpoint and their endpoints interleave in the
// cyclic order (exactly one endpoint of f inside the open arc between e's
// endpoints).
bool book_crosses(const std::vector<int>& order, const Edge& e, const Edge& f);

// Book embedding with at most k+1 pages, each simultaneously noncrossing and
// a star forest; every k-simplicial vertex of a non-complete k-tree is
// colourful (and at least one vertex if the k-tree is K_{k+1}).
BookEmbedding embed_star_forests(const KTreeBuild& b);

// Book embedding of a 2-tree with at most 2 pages, each a noncrossing forest;
// 2-simplicial vertices are colourful (two vertices when the 2-tree is K_3).
BookEmbedding embed_2tree_forests(const KTreeBuild& b);

// K_{2k} on one circle, edge u_a u_b on page 1 + floor(((a+b) mod 2k)/2);
// every page is a noncrossing zig-zag.
BookEmbedding zigzag_complete(int k);

}  // namespace ktdraw
