#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "flowroots/flow.hpp"
#include "flowroots/multigraph.hpp"
#include "flowroots/polynomial.hpp"
#include "flowroots/roots.hpp"

namespace flowroots {

mpq_class default_root_tolerance(); // 10^-12

// eta(G): the least flow root in (1,2], taken as exactly 2 when the flow
// polynomial has no root in the open interval (1,2).  root_at_two
// records whether 2 itself is a root (the two cases are otherwise
// indistinguishable for zero-free-interval purposes).
struct EtaResult {
    bool is_two = true;
    bool root_at_two = false;
    std::optional<IsolatedRoot> root; // certified root in (1,2) when !is_two
};

EtaResult eta(FlowEngine& engine, const Multigraph& g,
              const mpq_class& tolerance = default_root_tolerance());
EtaResult eta(const Multigraph& g,
              const mpq_class& tolerance = default_root_tolerance());

// Exact three-way comparison of eta values (2 compares above every
// certified root).  Overlapping brackets are refined; a genuinely shared
// root is recognised through the gcd of the two defining factors.
int compare_eta(const EtaResult& a, const EtaResult& b);

struct EtaFamilyResult {
    EtaResult value;                    // exact 2 for an empty family
    std::optional<int> attaining_index; // first minimiser when value < 2
};
EtaFamilyResult eta_family(FlowEngine& engine,
                           const std::vector<Multigraph>& graphs,
                           const mpq_class& tolerance = default_root_tolerance());
EtaFamilyResult eta_family(const std::vector<Multigraph>& graphs,
                           const mpq_class& tolerance = default_root_tolerance());

// Smallest divisor of f still owning the root bracketed by (low, high),
// found by bounded Kronecker interpolation: for each degree up to
// degree_bound, integer divisor tuples of f at small integer points are
// interpolated and trial-divided.  f must be square-free with exactly
// one root inside the bracket; rational roots of f are deflated first.
// Returns f itself when no admissible divisor exists within the bound.
IntPolynomial minimal_factor_for_root(const IntPolynomial& f,
                                      const mpq_class& low,
                                      const mpq_class& high,
                                      int degree_bound = 4);

struct XiCertificate {
    int k = 0;
    bool is_two = false;                         // value is exactly 2
    std::optional<IsolatedRoot> root;            // certified value when < 2
    std::optional<IntPolynomial> minimal_factor; // factor owning that root
    std::optional<std::string> attaining_graph;  // canonical code
    std::string value_approx;                    // decimal string ("2" if is_two)
    std::vector<EtaResult> level_values;         // eta of levels 2..k in order
};

struct XiOptions {
    long theta_budget = 1000000;
    mpq_class tolerance = default_root_tolerance();
    int factor_degree_bound = 4;
};

// Certify the zero-free constant for level k: evaluates eta on every
// enumerated level 2..k, checks the sequence is non-increasing and that
// the running minimum agrees with the final level's value, and returns
// the certificate built from the final level.  k <= 2 gives exactly 2.
XiCertificate xi(int k, const XiOptions& options = {});

} // namespace flowroots
