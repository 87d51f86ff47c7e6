#pragma once

#include <vector>

#include "flowroots/multigraph.hpp"

namespace flowroots {

// Exhaustive corpus: every connected bridgeless multigraph (up to
// isomorphism) with at most max_vertices vertices, at most max_edges edges
// and per-pair multiplicity at most max_multiplicity.  Loops are excluded:
// they only dilate a flow polynomial by powers of (lambda - 1), so they add
// no screening signal (looped inputs are still accepted everywhere else).
//
// Optionally extends the corpus with seeded random samples: each sample is
// a Hamiltonian cycle plus random chords, so it is bridgeless by
// construction.  The same options always produce the same corpus, in
// canonical-code order.
struct CorpusOptions {
    int max_vertices = 6;
    int max_edges = 11;
    int max_multiplicity = 3;
    long budget = 10000000;  // labelled skeleton/multiplicity combinations
    int random_samples = 0;
    unsigned seed = 1;
    int random_vertices = 8;  // sampled graphs use 3..random_vertices vertices
    int random_edges = 14;    // and vertex-count..random_edges edges
};

// Throws DomainError for nonsensical options and BudgetError when the
// labelled enumeration would exceed the budget.
std::vector<Multigraph> default_corpus(const CorpusOptions& options = {});

} // namespace flowroots
