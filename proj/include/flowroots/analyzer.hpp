#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "flowroots/flow.hpp"
#include "flowroots/multigraph.hpp"
#include "flowroots/roots.hpp"
#include "flowroots/xi.hpp"

namespace flowroots {

// Reality profile of the flow roots of one bridgeless multigraph.
// R(G) = roots_in_open_12 is the multiset of real flow roots in (1,2);
// omega(G) = sum over R(G) of (2 - root) is certified by the exact
// rational enclosure [omega_low, omega_high].
struct RootProfile {
    int degree = 0;
    bool all_real = true;
    std::vector<IsolatedRoot> roots_in_open_12;
    int t = 0;  // |R(G)| counted with multiplicity
    mpq_class omega_low, omega_high;
    bool subset_123 = true;  // every root lies in {1, 2, 3}
    int mult_at_1 = 0, mult_at_2 = 0, mult_at_3 = 0;
    int real_root_count = 0;  // all real roots, with multiplicity
    int reals_below_1 = 0;    // expected 0 for bridgeless inputs
    int reals_ge_2 = 0;       // real roots in [2, inf), with multiplicity
};
RootProfile roots_profile(FlowEngine& engine, const Multigraph& g,
                          const mpq_class& tolerance = default_root_tolerance());
RootProfile roots_profile(const Multigraph& g,
                          const mpq_class& tolerance = default_root_tolerance());

// Leading-coefficient identities of a connected bridgeless graph with no
// 2-edge-cut: writing F = sum b_i lambda^i of degree r = |E| - |V| + 1,
// checks b_r = 1, b_{r-1} = -|E| and b_{r-2} = C(|E|,2) - gamma, where
// gamma counts the minimal 3-edge-cuts.  Precondition failures are
// reported via applicable/reason, never thrown.
struct CoefficientAudit {
    bool applicable = false;
    std::string reason;
    int r = 0;
    long gamma = 0;
    bool degree_matches = false;
    bool leading_ok = false;
    bool subleading_ok = false;  // vacuously true when r == 0
    bool third_ok = false;       // vacuously true when r <= 1
    bool passed() const {
        return applicable && degree_matches && leading_ok && subleading_ok &&
               third_ok;
    }
};
CoefficientAudit coefficient_audit(FlowEngine& engine, const Multigraph& g);
CoefficientAudit coefficient_audit(const Multigraph& g);

// Lower bound gamma >= (|E|-r)(|E|-1) / (2(r-1)) for a connected graph
// with no 2-edge-cut whose flow roots are all real; strict whenever r-1
// does not divide |E|-1.  r <= 1 and |V| <= 2 are reported as degenerate.
struct GammaBoundAudit {
    bool applicable = false;
    bool degenerate = false;
    std::string reason;
    long gamma = 0;
    mpq_class bound;
    bool holds = false;
    bool strict_required = false;
    bool strict_holds = false;
    bool passed() const {
        return !applicable || (holds && (!strict_required || strict_holds));
    }
};
GammaBoundAudit gamma_bound_audit(FlowEngine& engine, const Multigraph& g,
                                  const mpq_class& tolerance =
                                      default_root_tolerance());
GammaBoundAudit gamma_bound_audit(const Multigraph& g,
                                  const mpq_class& tolerance =
                                      default_root_tolerance());

// Degree bookkeeping used by the structural bounds.
struct StructuralProfile {
    int r = 0;                    // |E| - |V| + 1
    long alpha = 0;               // sum over degrees d >= 3 of (d - 3)
    std::map<int, int> v_counts;  // degree histogram
    long gamma = 0;               // number of minimal 3-edge-cuts
    int k = 0;                    // |W(G)|, vertices of degree > 3
    bool hypothesis_ok = false;   // nonseparable, no 2-edge-cut, no proper
                                  // 3-edge-cut, |V| >= 3
};
StructuralProfile structural_profile(const Multigraph& g);

// The structural trichotomy for a nonseparable graph with no 2-edge-cut,
// no proper 3-edge-cut, not K_2, and all flow roots real: either the graph
// is K_4, or every flow root is in {1,2}, or the k >= 3 inequality bundle
// holds (omega >= |E|-2|V|+1 >= 2k-1, |R| >= (2k-1)/(2-xi_k), and the
// |E| window).  The degree-count inequalities r >= max(3, 8k-6),
// |V| >= 2k and the alpha lower bound are checked whenever |V| >= 3.
struct StructuralBoundsAudit {
    bool applicable = false;
    std::string reason;
    StructuralProfile profile;
    bool lemma_checked = false;  // |V| >= 3 inequalities evaluated
    bool lemma_i = false;        // r >= max(3, 8k-6) and |V| >= 2k
    bool lemma_ii = false;       // alpha >= r-2 (k <= 1) / r+2k-3 (k >= 2)
    int theorem_case = 0;        // 0 none, 1 K_4, 2 roots in {1,2}, 3 bundle
    bool case3_ok = false;
    bool passed() const {
        if (!applicable) return true;
        if (lemma_checked && !(lemma_i && lemma_ii)) return false;
        return theorem_case == 1 || theorem_case == 2 ||
               (theorem_case == 3 && case3_ok);
    }
};
StructuralBoundsAudit structural_bounds_audit(FlowEngine& engine,
                                              const Multigraph& g,
                                              const mpq_class& tolerance =
                                                  default_root_tolerance());
StructuralBoundsAudit structural_bounds_audit(const Multigraph& g,
                                              const mpq_class& tolerance =
                                                  default_root_tolerance());

// Corpus screening: root profiles plus all three audits per graph, with
// the conjecture check (all real roots => roots subset of {1,2,3}) and
// tallies.  Rows come back in input order; each row is independent of the
// worker count.
struct ScreenOptions {
    int jobs = 0;  // 0: library default worker count
    mpq_class tolerance = default_root_tolerance();
    bool with_audits = true;
};
struct ScreenRow {
    std::string canonical;
    int vertices = 0;
    int edges = 0;
    int degree = 0;
    bool all_real = false;
    bool subset_123 = false;
    int t = 0;
    std::string omega;  // decimal midpoint of the certified enclosure
    int mult_at_1 = 0, mult_at_2 = 0, mult_at_3 = 0;
    bool in_scope_52 = false;     // |E| <= |V|+16 or t <= 8
    bool counterexample = false;  // all_real && !subset_123
    bool coefficient_applicable = false, coefficient_ok = false;
    bool gamma_applicable = false, gamma_ok = false;
    bool structural_applicable = false, structural_ok = false;
    int theorem_case = 0;
};
struct ScreenReport {
    long graphs = 0;
    long all_real_count = 0;
    long subset_123_count = 0;
    long counterexamples = 0;
    long coefficient_checked = 0, coefficient_failed = 0;
    long gamma_checked = 0, gamma_failed = 0;
    long structural_checked = 0, structural_failed = 0;
    std::vector<ScreenRow> rows;
};
ScreenReport screen_corpus(const std::vector<Multigraph>& graphs,
                           const ScreenOptions& options = {});

} // namespace flowroots
