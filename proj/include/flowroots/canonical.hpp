#pragma once

#include <string>
#include <vector>

#include "flowroots/multigraph.hpp"

namespace flowroots {

// Canonical form of a multigraph.  Parallel edges and loops are collapsed
// to multiplicity labels, then a canonical vertex order is found by
// iterative colour refinement with full backtracking over the first
// smallest non-singleton cell.  Two graphs get the same code iff they are
// isomorphic; the code doubles as a printable key:
//   "<n>;<loop counts in canonical order>;<upper-triangle multiplicities>"
std::string canonical_code(const Multigraph& g);

// A permutation old->new realising the canonical order.
std::vector<int> canonical_labeling(const Multigraph& g);

bool isomorphic(const Multigraph& a, const Multigraph& b);

// Rebuild a graph from its code (inverse of canonical_code up to
// isomorphism; the result is already canonically labelled).
Multigraph from_canonical_code(const std::string& code);

} // namespace flowroots
