#include "flowroots/xi.hpp"

#include <algorithm>
#include <stdexcept>

#include "flowroots/canonical.hpp"
#include "flowroots/errors.hpp"
#include "flowroots/rational.hpp"
#include "flowroots/structure.hpp"
#include "flowroots/theta.hpp"

namespace flowroots {

namespace {

const mpq_class kOne = 1;
const mpq_class kTwo = 2;

// all divisors of |n|, positive only
std::vector<long> divisors(long n) {
    if (n < 0) n = -n;
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Lagrange interpolation through integer points; empty result when the
// coefficients are not all integers or the degree is below points-1.
std::optional<IntPolynomial> interpolate_integer(const std::vector<long>& xs,
                                                 const std::vector<long>& ys) {
    const std::size_t n = xs.size();
    std::vector<mpq_class> coeffs(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        // basis polynomial for point i, times ys[i]
        std::vector<mpq_class> basis = {1};
        mpq_class denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            // multiply basis by (x - xs[j])
            basis.push_back(0);
            for (std::size_t c = basis.size() - 1; c > 0; --c)
                basis[c] = basis[c - 1] - mpq_class(xs[j]) * basis[c];
            basis[0] = -mpq_class(xs[j]) * basis[0];
            denom *= mpq_class(xs[i]) - mpq_class(xs[j]);
        }
        for (std::size_t c = 0; c < basis.size(); ++c)
            coeffs[c] += mpq_class(ys[i]) * basis[c] / denom;
    }
    std::vector<mpz_class> integral(n);
    for (std::size_t c = 0; c < n; ++c) {
        mpq_class v = coeffs[c];
        v.canonicalize();
        if (v.get_den() != 1) return std::nullopt;
        integral[c] = v.get_num();
    }
    IntPolynomial g(integral);
    if (g.degree() != static_cast<int>(n) - 1) return std::nullopt;
    return g;
}

int roots_inside(const IntPolynomial& p, const mpq_class& low,
                 const mpq_class& high) {
    if (low == high) return sign_at(p, low) == 0 ? 1 : 0;
    return count_real_roots(p, Bound::open(low), Bound::open(high));
}

} // namespace

mpq_class default_root_tolerance() { return parse_rational("1e-12"); }

IntPolynomial minimal_factor_for_root(const IntPolynomial& f,
                                      const mpq_class& low,
                                      const mpq_class& high,
                                      int degree_bound) {
    if (f.is_zero()) throw DomainError("minimal_factor_for_root: zero input");
    IntPolynomial current = primitive_part(f);
    // deflate rational roots (the bracketed root is irrational whenever
    // the bracket is non-degenerate, so this never removes it)
    for (const auto& r : rational_roots(current)) {
        if (low == high && r == low) continue; // degenerate bracket: keep it
        IntPolynomial linear({mpz_class(-r.get_num()), mpz_class(r.get_den())});
        while (sign_at(current, r) == 0 && current.degree() > 1)
            current = exact_divide(current, linear);
    }
    if (roots_inside(current, low, high) != 1)
        throw DomainError("minimal_factor_for_root: bracket does not isolate");

    bool split = true;
    while (split && current.degree() > 1) {
        split = false;
        const int top = std::min(degree_bound, current.degree() - 1);
        for (int d = 1; d <= top && !split; ++d) {
            // evaluation points 0, 1, -1, 2, -2, ...
            std::vector<long> xs;
            for (int i = 0; static_cast<int>(xs.size()) < d + 1; ++i)
                xs.push_back(i == 0 ? 0 : (i % 2 ? (i + 1) / 2 : -(i / 2)));
            std::vector<std::vector<long>> choices(d + 1);
            bool feasible = true;
            long tuples = 1;
            for (int i = 0; i <= d && feasible; ++i) {
                mpz_class v = evaluate(current, mpz_class(xs[i]));
                if (v == 0 || !v.fits_slong_p() ||
                    (v > 0 ? v : -v) > 1000000000000L) {
                    feasible = false;
                    break;
                }
                auto divs = divisors(v.get_si());
                // fix the overall sign through the first point
                choices[i].clear();
                for (long dv : divs) {
                    choices[i].push_back(dv);
                    if (i > 0) choices[i].push_back(-dv);
                }
                tuples *= static_cast<long>(choices[i].size());
                if (tuples > 200000) feasible = false;
            }
            if (!feasible) continue;

            std::vector<std::size_t> pick(d + 1, 0);
            while (true) {
                std::vector<long> ys(d + 1);
                for (int i = 0; i <= d; ++i) ys[i] = choices[i][pick[i]];
                auto candidate = interpolate_integer(xs, ys);
                if (candidate && content(*candidate) == 1) {
                    bool divides = true;
                    IntPolynomial quotient;
                    try {
                        quotient = exact_divide(current, *candidate);
                    } catch (const DomainError&) {
                        divides = false;
                    }
                    if (divides) {
                        current = roots_inside(*candidate, low, high) == 1
                                      ? primitive_part(*candidate)
                                      : primitive_part(quotient);
                        split = true;
                        break;
                    }
                }
                int pos = d;
                while (pos >= 0 && ++pick[pos] == choices[pos].size())
                    pick[pos--] = 0;
                if (pos < 0) break;
            }
        }
    }
    if (current.leading() < 0) current = -current;
    return current;
}

EtaResult eta(FlowEngine& engine, const Multigraph& g,
              const mpq_class& tolerance) {
    if (!structural_summary(g).bridges.empty())
        throw DomainError("eta needs a bridgeless graph");
    IntPolynomial f = engine.flow_polynomial(g).polynomial;
    EtaResult result;
    result.root_at_two = sign_at(f, kTwo) == 0;
    auto roots = isolate_and_refine(f, Bound::open(kOne), Bound::open(kTwo),
                                    tolerance);
    if (roots.empty()) return result; // eta = 2 exactly
    result.is_two = false;
    result.root = roots.front(); // ascending order: the least root
    if (!result.root->exact)
        result.root->factor = minimal_factor_for_root(
            result.root->factor, result.root->low, result.root->high);
    return result;
}

EtaResult eta(const Multigraph& g, const mpq_class& tolerance) {
    FlowEngine engine;
    return eta(engine, g, tolerance);
}

int compare_eta(const EtaResult& a, const EtaResult& b) {
    if (a.is_two && b.is_two) return 0;
    if (a.is_two) return 1;
    if (b.is_two) return -1;
    IsolatedRoot ra = *a.root, rb = *b.root;
    for (int pass = 0; pass < 512; ++pass) {
        if (ra.exact && rb.exact)
            return ra.low < rb.low ? -1 : (ra.low == rb.low ? 0 : 1);
        if (ra.high <= rb.low) return -1; // brackets are open, so ties resolve
        if (rb.high <= ra.low) return 1;
        if (ra.exact) {
            // rb is irrational, ra.low strictly inside rb's bracket
            return count_real_roots(rb.factor, Bound::open(rb.low),
                                    Bound::closed_at(ra.low)) == 1
                       ? 1
                       : -1;
        }
        if (rb.exact) {
            return count_real_roots(ra.factor, Bound::open(ra.low),
                                    Bound::closed_at(rb.low)) == 1
                       ? -1
                       : 1;
        }
        // overlapping brackets around irrational roots: equal numbers?
        IntPolynomial shared = poly_gcd(ra.factor, rb.factor);
        if (shared.degree() >= 1) {
            mpq_class lo = std::max(ra.low, rb.low);
            mpq_class hi = std::min(ra.high, rb.high);
            if (count_real_roots(shared, Bound::open(lo), Bound::open(hi)) >= 1)
                return 0;
        }
        mpq_class half_a = (ra.high - ra.low) / 2;
        refine_bracket(ra.factor, ra.low, ra.high, half_a);
        mpq_class half_b = (rb.high - rb.low) / 2;
        refine_bracket(rb.factor, rb.low, rb.high, half_b);
    }
    throw std::logic_error("compare_eta: could not separate values");
}

EtaFamilyResult eta_family(FlowEngine& engine,
                           const std::vector<Multigraph>& graphs,
                           const mpq_class& tolerance) {
    EtaFamilyResult best; // empty family: exactly 2
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        EtaResult candidate = eta(engine, graphs[i], tolerance);
        if (best.attaining_index.has_value() || !best.value.is_two) {
            if (compare_eta(candidate, best.value) < 0) {
                best.value = candidate;
                best.attaining_index = static_cast<int>(i);
            }
        } else if (!candidate.is_two) {
            best.value = candidate;
            best.attaining_index = static_cast<int>(i);
        } else {
            best.value.root_at_two =
                best.value.root_at_two || candidate.root_at_two;
        }
    }
    if (best.value.is_two) best.attaining_index.reset();
    return best;
}

EtaFamilyResult eta_family(const std::vector<Multigraph>& graphs,
                           const mpq_class& tolerance) {
    FlowEngine engine;
    return eta_family(engine, graphs, tolerance);
}

XiCertificate xi(int k, const XiOptions& options) {
    if (k < 0) throw DomainError("xi needs k >= 0");
    XiCertificate cert;
    cert.k = k;
    FlowEngine engine;
    ThetaOptions theta_options{.budget = options.theta_budget};

    std::vector<EtaFamilyResult> per_level; // levels 2..max(2,k)
    std::vector<std::vector<PhiRecord>> levels;
    for (int i = 2; i <= k; ++i) {
        levels.push_back(enumerate_theta(i, theta_options));
        std::vector<Multigraph> graphs;
        for (const auto& rec : levels.back()) graphs.push_back(rec.graph);
        per_level.push_back(eta_family(engine, graphs, options.tolerance));
        cert.level_values.push_back(per_level.back().value);
    }

    // the sequence eta(level 2), ..., eta(level k) must be non-increasing
    for (std::size_t i = 0; i + 1 < per_level.size(); ++i)
        if (compare_eta(per_level[i + 1].value, per_level[i].value) > 0)
            throw std::logic_error("xi: eta sequence increased");

    if (per_level.empty() || per_level.back().value.is_two) {
        cert.is_two = true;
        cert.value_approx = "2";
        return cert;
    }

    // the minimum of the sequence must agree with the last entry
    std::size_t argmin = 0;
    for (std::size_t i = 1; i < per_level.size(); ++i)
        if (compare_eta(per_level[i].value, per_level[argmin].value) < 0)
            argmin = i;
    if (compare_eta(per_level[argmin].value, per_level.back().value) != 0)
        throw std::logic_error("xi: minimum disagrees with final level");

    const EtaFamilyResult& final_level = per_level.back();
    cert.is_two = false;
    cert.root = final_level.value.root;
    cert.minimal_factor = final_level.value.root->factor;
    cert.attaining_graph =
        levels.back()[*final_level.attaining_index].canonical;
    cert.value_approx = final_level.value.root->approx;
    return cert;
}

} // namespace flowroots
