// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#pragma once

#include <string>

#include "ktdraw/graph.hpp"
#include "ktdraw/verify.hpp"

namespace ktdraw {

// Result of a brute-force parameter computation. `classes` is the witness
// partition (classes 1..value); book searches also fill `order`. The counters
// and `method` record the exhaustion that rules out value-1.
struct OracleResult {
    int value = 0;
    std::vector<int> order;
    EdgeColouring classes;
    long long states_explored = 0;
    long long states_pruned = 0;
    std::string method;
};

// Minimum page number over cyclic vertex orders (vertex 0 fixed, reflections
// quotiented); pages via branch-and-bound colouring of the crossing-conflict
// graph. Requires n <= 9.
OracleResult exact_book_thickness(const Graph& g);

// Minimum number of planar parts in an edge partition; planarity by the
// Euler bound plus exhaustive Kuratowski-subdivision search. Requires n <= 10.
OracleResult exact_thickness(const Graph& g);

// Forest partition number: the Nash-Williams value together with an explicit
// forest partition found by backtracking. Requires n <= 10.
OracleResult exact_arboricity(const Graph& g);

// Minimum number of star forests in an edge partition, by exhaustive
// colouring with star-forest pruning. Requires |E| <= 18.
OracleResult exact_star_arboricity(const Graph& g);

// Computes thickness, outerthickness, arboricity and star arboricity exactly
// (outerplanarity by K_4 / K_{2,3} exclusion) and checks every relation
// between them that must hold. Requires n <= 7 and |E| <= 18.
Report inequality_chain_check(const Graph& g);

}  // namespace ktdraw
