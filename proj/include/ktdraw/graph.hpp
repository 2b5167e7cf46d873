// This file is part of ktdraw, exact drawings and book embeddings of k-trees.
// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ktdraw {

// Unordered edge, stored with the smaller endpoint first.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

// Edge -> colour (or page) index, 1-based.
using EdgeColouring = std::map<Edge, int>;

struct Graph {
    int vertex_count = 0;
    std::set<Edge> edges;

    bool has_edge(int u, int v) const { return edges.count(make_edge(u, v)) > 0; }
    void add_edge(int u, int v);
};

std::vector<std::vector<int>> adjacency(const Graph& g);

bool is_clique(const Graph& g, const std::vector<int>& verts);

// Vertices whose neighbourhood is a k-clique of exactly k vertices, ascending.
std::vector<int> simplicial_vertices(const Graph& g, int k);

struct Addition {
    int v = 0;
    std::vector<int> clique;
};

// Construction order of a k-tree: a K_{k+1} base followed by vertices added
// onto existing k-cliques.  Vertex ids of a valid build cover 0..n-1.
struct KTreeBuild {
    int k = 0;
    std::vector<int> base;
    std::vector<Addition> additions;

    int vertex_count() const {
        return static_cast<int>(base.size() + additions.size());
    }
};

// Realizes the build as a Graph, validating every step; throws
// std::invalid_argument on a malformed build.
Graph realize(const KTreeBuild& b);

struct PartitionCase {
    enum class Kind { A, B };
    Kind kind = Kind::A;
    std::vector<int> S;  // ascending
    int pivot_v = -1;    // CaseB only
};

// Colour vector of an independent-set vertex of a complete split graph: the
// set of (spoke colour, clique endpoint) pairs.
struct ColourVector {
    int vertex = -1;
    std::set<std::pair<int, int>> entries;

    bool operator<(const ColourVector& o) const { return entries < o.entries; }
    bool operator==(const ColourVector& o) const { return entries == o.entries; }
};

// Thrown when ktree_certify rejects a graph; stage names the first failed
// check.
class NotAKTree : public std::runtime_error {
  public:
    explicit NotAKTree(std::string stage_)
        : std::runtime_error("not a k-tree: " + stage_), stage(std::move(stage_)) {}
    std::string stage;
};

// Reconstructs a build certifying that g is a k-tree, peeling the
// lowest-indexed simplicial vertex at every step; throws NotAKTree with the
// first failed stage ("fewer than k+1 vertices", "wrong edge count",
// "no simplicial vertex found", "base not K_{k+1}").
KTreeBuild ktree_certify(const Graph& g, int k);

// Seed-deterministic random k-tree on n vertices; every addition picks a
// uniformly random clique from the incrementally tracked k-clique list.
KTreeBuild random_ktree(int k, int n, std::uint64_t seed);

// The partition at the heart of every recursive construction: S is a
// nonempty independent set of k-simplicial vertices such that either G\S is
// K_k (CaseA) or all of S hugs one k-simplicial vertex v of G\S (CaseB).
PartitionCase lemma_partition(const KTreeBuild& b);

// Complete split graph K*_{k,s}: a k-clique plus s independent vertices each
// adjacent to the whole clique, as a k-tree build.
KTreeBuild complete_split(int k, int s);

// The k-tree whose book thickness exceeds k: K*_{k,2k^2+1} where every
// independent vertex v additionally receives, for each of the first three
// clique vertices x_i, four vertices added onto (clique + v) - x_i.
KTreeBuild qk_graph(int k);

struct StarLbGadget {
    Graph graph;
    std::vector<int> clique;      // the k-clique
    std::vector<int> s_vertices;  // independent set of K*_{k,k^k+1}
    std::vector<int> pendants;    // pendants[i] is attached to s_vertices[i]
};

// K*_{k,k^k+1} plus one pendant per independent vertex; treewidth k but not a
// k-tree, so returned as a plain graph with the three vertex classes marked.
StarLbGadget star_lb_graph(int k);

// Embeds the realized k-tree into a (k+1)-tree on one extra vertex: a new
// vertex is adjoined to the base clique and every addition clique gains its
// lowest-indexed common neighbour.
KTreeBuild ktree_lift(const KTreeBuild& b);

}  // namespace ktdraw
