#pragma once

#include <string>
#include <utility>
#include <vector>

namespace flowroots {

// Undirected multigraph on vertices 0..n-1.  Edges are kept as a sorted
// vector of normalized (min,max) endpoint pairs; parallel edges are
// repeated entries and a loop has both endpoints equal.  An edge id is an
// index into that sorted vector, so structurally equal graphs assign the
// same ids.  All editing operations return a new graph.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::pair<int, int>& edge(int id) const;
    bool is_loop(int id) const;
    int loop_count() const;
    // Loops contribute 2 to the degree of their vertex.
    int degree(int v) const;
    std::vector<int> degrees() const;
    // Distinct neighbours of v other than v itself.
    std::vector<int> neighbours(int v) const;

    Multigraph delete_edge(int id) const;
    Multigraph delete_edges(std::vector<int> ids) const;
    // G/e: delete e, then identify its endpoints.  Parallel copies of e
    // become loops.  For a loop this degenerates to plain deletion.
    Multigraph contract_edge(int id) const;
    // Minor-style contraction of an edge set: every connected component of
    // the subgraph spanned by `ids` collapses to one vertex, the edges in
    // `ids` disappear, all other edges are kept (possibly as loops).
    Multigraph contract_edges(std::vector<int> ids) const;
    // Merge v into u (u != v).  Edges between u and v become loops.
    Multigraph identify_vertices(int u, int v) const;
    Multigraph delete_vertex(int v) const;
    Multigraph add_edge(int u, int v) const;
    // perm[i] is the new label of vertex i; perm must be a permutation.
    Multigraph relabel(const std::vector<int>& perm) const;
    // Subgraph spanned by the given edge ids plus `extra_vertices`;
    // vertices are renumbered in increasing order of their old labels.
    // old_of[new_id] reports the old label of each kept vertex.
    Multigraph subgraph(const std::vector<int>& edge_ids,
                        const std::vector<int>& extra_vertices,
                        std::vector<int>* old_of = nullptr) const;

    bool operator==(const Multigraph&) const = default;

    // Text form understood by parse_multigraph.
    std::string to_text() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

// Line-oriented format: '#' starts a comment, first directive is "v <n>",
// then one "e <u> <w>" per edge ("e u u" is a loop, repeated lines are
// parallel edges).  Throws ParseError with a line number on bad input.
Multigraph parse_multigraph(const std::string& text);

} // namespace flowroots
