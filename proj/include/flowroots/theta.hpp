#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flowroots/multigraph.hpp"
#include "flowroots/structure.hpp"

namespace flowroots {

// One step of a construction history: the child is expand(parent, edge).
struct ExpansionStep {
    std::string parent_canonical;
    int edge = 0;
    bool operator==(const ExpansionStep&) const = default;
};

// Result of the Phi membership test, plus bookkeeping for enumerated
// Theta members (canonical code and a construction path back to Z3).
struct PhiRecord {
    Multigraph graph;
    std::string canonical;
    int vertex_count = 0;
    std::vector<ExpansionStep> construction; // empty for Z3 itself
    bool condition_a = false;                // G-e nonseparable for all e
    bool condition_b = false;                // b(G/e) even for all e
    bool condition_c = false;                // split parity condition
    std::optional<int> witness_a;            // first edge whose removal separates
    std::optional<int> witness_b;            // first edge with odd b(G/e)
    std::optional<VertexSplit> witness_c;    // first split with a parity mismatch

    bool in_phi() const { return condition_a && condition_b && condition_c; }
};

struct ThetaOptions {
    // Maximum number of (parent, edge) expansions over all levels.
    long budget = 1000000;
};

// The two-vertex graph with j >= 1 parallel edges.
Multigraph z_graph(int j);

// G(e): delete the non-loop edge e with ends u1, u2, add a new vertex w
// and two parallel edges from w to each of u1 and u2.
Multigraph expand(const Multigraph& g, int e);

// All members of the recursive family with exactly k >= 2 vertices
// (Z3 at level 2, closed under expand), deduplicated by canonical code
// and sorted by it.  Construction histories are deterministic: parents
// in canonical order, edges ascending, first constructor wins.
std::vector<PhiRecord> enumerate_theta(int k, const ThetaOptions& options = {});

// Evaluate the three membership conditions on a nonseparable graph with
// at least two vertices.  All three are always evaluated; each records
// the first witness of its own failure.
PhiRecord phi_membership(const Multigraph& g);

struct CrossValidationLevel {
    int vertex_count = 0;
    std::vector<std::string> phi_codes;   // exhaustive filter survivors
    std::vector<std::string> theta_codes; // enumerate_theta output
    bool matched = false;
};

struct CrossValidationReport {
    int max_vertices = 0;
    long generated = 0; // labelled multigraphs examined
    std::vector<CrossValidationLevel> levels;
    bool all_match = false;
};

// Exhaustively run every nonseparable loopless multigraph on 2..n
// vertices (per-pair multiplicity <= max_multiplicity) through the
// membership test and compare the surviving isomorphism classes with
// enumerate_theta, level by level.  The budget caps the number of
// labelled graphs generated.
CrossValidationReport cross_validate_phi_theta(int max_vertices,
                                               long budget = 5000000,
                                               int max_multiplicity = 3);

} // namespace flowroots
