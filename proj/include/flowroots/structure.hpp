#pragma once

#include <vector>

#include "flowroots/multigraph.hpp"

namespace flowroots {

// One-pass structural facts.  A block is a maximal non-separable subgraph;
// the blocks listed here are exactly the non-trivial ones (each has at
// least one edge), given as edge-id sets partitioning E.  Every loop is a
// block of its own.  b(G) = blocks.size().
struct StructuralSummary {
    std::vector<int> degrees;
    int min_degree = 0;
    std::vector<int> big_vertices;   // W(G): degree > 3
    std::vector<int> gamma_vertices; // degree 4 with exactly two distinct neighbours
    bool connected = true;
    int component_count = 0;
    std::vector<int> bridges;                 // edge ids
    std::vector<int> cut_vertices;            // G - v has more components than G
    std::vector<std::vector<int>> blocks;     // edge-id partition of E
    int nontrivial_block_count = 0;           // b(G)
    bool nonseparable = false;
};

StructuralSummary structural_summary(const Multigraph& g);

// Number of connected components (isolated vertices count).
int component_count(const Multigraph& g);
bool is_connected(const Multigraph& g);

// Component vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> components(const Multigraph& g);

// A minimal disconnecting edge set of size exactly k.  `proper` is
// meaningful for k == 3: true unless the cut is the star of a degree-3
// vertex.
struct EdgeCut {
    std::vector<int> edges;
    bool proper = true;
};

// All minimal edge cuts of size exactly k (deleting the set increases the
// component count, deleting any proper subset does not), in lexicographic
// edge-id order.  Exhaustive over k-subsets; meant for desk-scale graphs.
std::vector<EdgeCut> edge_cuts(const Multigraph& g, int k);

// A two-vertex split: the edge set is partitioned into two sides whose
// induced subgraphs share exactly the vertices {u1, u2}.  The pieces that
// get distributed are the connected components of G - {u1,u2} (with their
// attachment edges) plus each direct u1-u2 edge (and each loop at u1 or
// u2) as its own piece.
struct VertexSplit {
    int u1 = 0, u2 = 0;
    std::vector<int> side1, side2; // edge ids, each sorted
};

// Every split over every unordered vertex pair, up to swapping the sides.
// Pre: g connected, |V| >= 2.
std::vector<VertexSplit> vertex_splits(const Multigraph& g);

// One side of a split as a standalone graph.  u1/u2 report the new labels
// of the split pair inside it (both are always present as vertices).
struct SplitSide {
    Multigraph graph;
    int u1 = 0, u2 = 0;
};
SplitSide split_side(const Multigraph& g, const VertexSplit& split, int which);

} // namespace flowroots
