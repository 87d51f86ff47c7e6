#include "flowroots/analyzer.hpp"

#include <algorithm>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "flowroots/canonical.hpp"
#include "flowroots/errors.hpp"
#include "flowroots/polynomial.hpp"
#include "flowroots/rational.hpp"
#include "flowroots/structure.hpp"

namespace flowroots {

namespace {

mpz_class binomial(long n, unsigned long k) {
    if (n < 0) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), k);
    return out;
}

// Empty when the graph qualifies for the coefficient identities, else the
// first violated precondition.
std::string no_two_cut_obstruction(const Multigraph& g,
                                   const StructuralSummary& summary) {
    if (g.vertex_count() == 0 || !summary.connected) return "disconnected";
    if (!summary.bridges.empty()) return "has a bridge";
    if (!edge_cuts(g, 2).empty()) return "has a 2-edge-cut";
    return {};
}

} // namespace

RootProfile roots_profile(FlowEngine& engine, const Multigraph& g,
                          const mpq_class& tolerance) {
    auto summary = structural_summary(g);
    if (!summary.bridges.empty())
        throw DomainError("roots_profile: graph has a bridge");
    IntPolynomial f = engine.flow_polynomial(g).polynomial;
    RootProfile profile;
    profile.degree = f.degree();
    auto strip = strip_integer_roots(f, {1, 2, 3});
    profile.mult_at_1 = strip.multiplicity.at(1);
    profile.mult_at_2 = strip.multiplicity.at(2);
    profile.mult_at_3 = strip.multiplicity.at(3);
    profile.subset_123 = strip.remainder.degree() <= 0;
    profile.all_real = all_roots_real(f);
    profile.roots_in_open_12 =
        isolate_and_refine(f, Bound::open(1), Bound::open(2), tolerance);
    for (const auto& root : profile.roots_in_open_12) {
        profile.t += root.multiplicity;
        profile.omega_low += root.multiplicity * (mpq_class(2) - root.high);
        profile.omega_high += root.multiplicity * (mpq_class(2) - root.low);
    }
    for (const auto& part : squarefree_decompose(f).factors) {
        const auto& p = part.factor;
        profile.real_root_count +=
            part.multiplicity * count_real_roots(p, Bound::minus_infinity(),
                                                 Bound::plus_infinity());
        profile.reals_below_1 +=
            part.multiplicity *
            count_real_roots(p, Bound::minus_infinity(), Bound::open(1));
        profile.reals_ge_2 +=
            part.multiplicity *
            count_real_roots(p, Bound::closed_at(2), Bound::plus_infinity());
    }
    return profile;
}

RootProfile roots_profile(const Multigraph& g, const mpq_class& tolerance) {
    FlowEngine engine;
    return roots_profile(engine, g, tolerance);
}

CoefficientAudit coefficient_audit(FlowEngine& engine, const Multigraph& g) {
    CoefficientAudit audit;
    auto summary = structural_summary(g);
    audit.reason = no_two_cut_obstruction(g, summary);
    if (!audit.reason.empty()) return audit;
    audit.applicable = true;
    const long edges = static_cast<long>(g.edge_count());
    audit.r = static_cast<int>(edges) - g.vertex_count() + 1;
    audit.gamma = static_cast<long>(edge_cuts(g, 3).size());
    IntPolynomial f = engine.flow_polynomial(g).polynomial;
    audit.degree_matches = f.degree() == audit.r;
    audit.leading_ok = f.coeff(audit.r) == 1;
    audit.subleading_ok = audit.r < 1 || f.coeff(audit.r - 1) == -edges;
    audit.third_ok = audit.r < 2 ||
                     f.coeff(audit.r - 2) == binomial(edges, 2) - audit.gamma;
    return audit;
}

CoefficientAudit coefficient_audit(const Multigraph& g) {
    FlowEngine engine;
    return coefficient_audit(engine, g);
}

GammaBoundAudit gamma_bound_audit(FlowEngine& engine, const Multigraph& g,
                                  const mpq_class& tolerance) {
    GammaBoundAudit audit;
    auto summary = structural_summary(g);
    audit.reason = no_two_cut_obstruction(g, summary);
    if (!audit.reason.empty()) return audit;
    if (!roots_profile(engine, g, tolerance).all_real) {
        audit.reason = "complex flow roots";
        return audit;
    }
    const long edges = static_cast<long>(g.edge_count());
    const long r = edges - g.vertex_count() + 1;
    if (r <= 1) {
        audit.degenerate = true;
        audit.reason = "r <= 1: bound undefined";
        return audit;
    }
    if (g.vertex_count() <= 2) {
        audit.degenerate = true;
        audit.reason = "|V| <= 2 edge case";
        return audit;
    }
    audit.applicable = true;
    audit.gamma = static_cast<long>(edge_cuts(g, 3).size());
    audit.bound = mpq_class((edges - r) * (edges - 1), 2 * (r - 1));
    audit.bound.canonicalize();
    audit.holds = audit.gamma >= audit.bound;
    audit.strict_required = (edges - 1) % (r - 1) != 0;
    audit.strict_holds = audit.gamma > audit.bound;
    return audit;
}

GammaBoundAudit gamma_bound_audit(const Multigraph& g,
                                  const mpq_class& tolerance) {
    FlowEngine engine;
    return gamma_bound_audit(engine, g, tolerance);
}

StructuralProfile structural_profile(const Multigraph& g) {
    StructuralProfile profile;
    auto summary = structural_summary(g);
    profile.r = static_cast<int>(g.edge_count()) - g.vertex_count() + 1;
    for (int d : summary.degrees) {
        ++profile.v_counts[d];
        if (d >= 3) profile.alpha += d - 3;
    }
    auto cuts3 = edge_cuts(g, 3);
    profile.gamma = static_cast<long>(cuts3.size());
    profile.k = static_cast<int>(summary.big_vertices.size());
    bool proper3 = std::any_of(cuts3.begin(), cuts3.end(),
                               [](const EdgeCut& c) { return c.proper; });
    profile.hypothesis_ok = summary.nonseparable && edge_cuts(g, 2).empty() &&
                            !proper3 && g.vertex_count() >= 3;
    return profile;
}

StructuralBoundsAudit structural_bounds_audit(FlowEngine& engine,
                                              const Multigraph& g,
                                              const mpq_class& tolerance) {
    StructuralBoundsAudit audit;
    auto summary = structural_summary(g);
    if (!summary.nonseparable) {
        audit.reason = "separable";
        return audit;
    }
    if (!summary.bridges.empty()) {
        audit.reason = "has a bridge";
        return audit;
    }
    if (!edge_cuts(g, 2).empty()) {
        audit.reason = "has a 2-edge-cut";
        return audit;
    }
    audit.profile = structural_profile(g);
    if (audit.profile.gamma > 0) {
        auto cuts3 = edge_cuts(g, 3);
        if (std::any_of(cuts3.begin(), cuts3.end(),
                        [](const EdgeCut& c) { return c.proper; })) {
            audit.reason = "has a proper 3-edge-cut";
            return audit;
        }
    }
    RootProfile roots = roots_profile(engine, g, tolerance);
    if (!roots.all_real) {
        audit.reason = "complex flow roots";
        return audit;
    }
    audit.applicable = true;
    const long V = g.vertex_count();
    const long E = static_cast<long>(g.edge_count());
    const long r = audit.profile.r;
    const long k = audit.profile.k;
    const long alpha = audit.profile.alpha;
    if (V >= 3) {
        audit.lemma_checked = true;
        audit.lemma_i = r >= std::max(3L, 8 * k - 6) && V >= 2 * k;
        audit.lemma_ii = k == 1 ? alpha >= r - 2 : alpha >= r + 2 * k - 3;
    }
    IntPolynomial f = engine.flow_polynomial(g).polynomial;
    static const std::string k4_code =
        canonical_code(Multigraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3},
                                      {2, 3}}));
    if (canonical_code(g) == k4_code) {
        audit.theorem_case = 1;
        return audit;
    }
    if (strip_integer_roots(f, {1, 2}).remainder.degree() <= 0) {
        audit.theorem_case = 2;
        return audit;
    }
    audit.theorem_case = 3;
    if (k < 3) return audit;  // the bundle requires k >= 3: not satisfied
    bool ok = V >= 2 * k;
    // omega >= |E| - 2|V| + 1 >= 2k - 1, certified from below
    ok = ok && roots.omega_low >= E - 2 * V + 1 && E - 2 * V + 1 >= 2 * k - 1;
    ok = ok && std::max(V + 8 * k - 7, 2 * V + 2 * k - 2) <= E;
    ok = ok && 5 * E < 32 * V - 49;
    if (ok && k <= 5) {
        // use the certified bracket ends in the conservative direction
        XiCertificate cert = xi(static_cast<int>(k));
        const mpq_class hi = cert.is_two ? mpq_class(2) : cert.root->high;
        ok = mpq_class(roots.t) * (2 - hi) >= 2 * k - 1;
        ok = ok && mpq_class(E) * (hi - 1) <= (V + 1) * hi - 3;
    } else if (ok) {
        // k >= 6: only the 32/27 fallback is available
        ok = mpq_class(roots.t) >= mpq_class(27 * k, 11) - mpq_class(27, 22);
    }
    audit.case3_ok = ok;
    return audit;
}

StructuralBoundsAudit structural_bounds_audit(const Multigraph& g,
                                              const mpq_class& tolerance) {
    FlowEngine engine;
    return structural_bounds_audit(engine, g, tolerance);
}

ScreenReport screen_corpus(const std::vector<Multigraph>& graphs,
                           const ScreenOptions& options) {
    ScreenReport report;
    const long n = static_cast<long>(graphs.size());
    report.rows.resize(graphs.size());
    const int digits = digits_for_tolerance(options.tolerance);
    int jobs = options.jobs;
    if (jobs <= 0) {
#ifdef _OPENMP
        jobs = omp_get_max_threads();
#else
        jobs = 1;
#endif
    }
#pragma omp parallel num_threads(jobs)
    {
        FlowEngine engine;
#pragma omp for schedule(dynamic, 16)
        for (long i = 0; i < n; ++i) {
            const Multigraph& g = graphs[i];
            ScreenRow row;
            row.canonical = canonical_code(g);
            row.vertices = g.vertex_count();
            row.edges = static_cast<int>(g.edge_count());
            RootProfile profile = roots_profile(engine, g, options.tolerance);
            row.degree = profile.degree;
            row.all_real = profile.all_real;
            row.subset_123 = profile.subset_123;
            row.t = profile.t;
            mpq_class mid = (profile.omega_low + profile.omega_high) / 2;
            mid.canonicalize();
            row.omega = decimal_string(mid, digits);
            row.mult_at_1 = profile.mult_at_1;
            row.mult_at_2 = profile.mult_at_2;
            row.mult_at_3 = profile.mult_at_3;
            row.in_scope_52 = row.edges <= row.vertices + 16 || row.t <= 8;
            row.counterexample = row.all_real && !row.subset_123;
            if (options.with_audits) {
                auto coeff = coefficient_audit(engine, g);
                row.coefficient_applicable = coeff.applicable;
                row.coefficient_ok = coeff.passed();
                auto gamma = gamma_bound_audit(engine, g, options.tolerance);
                row.gamma_applicable = gamma.applicable;
                row.gamma_ok = gamma.passed();
                auto bounds =
                    structural_bounds_audit(engine, g, options.tolerance);
                row.structural_applicable = bounds.applicable;
                row.structural_ok = bounds.passed();
                row.theorem_case = bounds.theorem_case;
            }
            report.rows[i] = std::move(row);
        }
    }
    report.graphs = n;
    for (const ScreenRow& row : report.rows) {
        if (row.all_real) ++report.all_real_count;
        if (row.subset_123) ++report.subset_123_count;
        if (row.counterexample) ++report.counterexamples;
        if (row.coefficient_applicable) {
            ++report.coefficient_checked;
            if (!row.coefficient_ok) ++report.coefficient_failed;
        }
        if (row.gamma_applicable) {
            ++report.gamma_checked;
            if (!row.gamma_ok) ++report.gamma_failed;
        }
        if (row.structural_applicable) {
            ++report.structural_checked;
            if (!row.structural_ok) ++report.structural_failed;
        }
    }
    return report;
}

} // namespace flowroots
