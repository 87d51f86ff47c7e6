#include "flowroots/roots.hpp"

#include <algorithm>
#include <functional>

#include "flowroots/detail/ratpoly.hpp"
#include "flowroots/errors.hpp"
#include "flowroots/rational.hpp"

namespace flowroots {

namespace {

using detail::RatPoly;

// Positive rescaling of a rational polynomial to integer coefficients:
// multiplies by the denominator lcm and divides by the content, never
// flipping signs (that matters for Sturm sequences).
IntPolynomial scale_positive(const RatPoly& p) {
    if (p.empty()) return {};
    mpz_class denom = 1;
    for (const auto& c : p)
        denom = denom / gcd(denom, c.get_den()) * c.get_den();
    std::vector<mpz_class> ints;
    ints.reserve(p.size());
    for (const auto& c : p) {
        mpq_class scaled = c * denom;
        ints.push_back(scaled.get_num());
    }
    IntPolynomial raw{std::move(ints)};
    mpz_class g = content(raw);
    std::vector<mpz_class> out;
    for (const auto& c : raw.coeffs())
        out.push_back(c / g);
    return IntPolynomial(std::move(out));
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
    std::vector<IntPolynomial> chain;
    RatPoly a = detail::rp_from(p);
    RatPoly b = detail::rp_derivative(a);
    chain.push_back(scale_positive(a));
    while (!b.empty()) {
        chain.push_back(scale_positive(b));
        RatPoly q, r;
        detail::rp_divmod(a, b, q, r);
        for (auto& c : r) c = -c;
        a = std::move(b);
        b = std::move(r);
        if (!b.empty()) {
            // positive rescale to tame coefficient growth
            mpq_class s = abs(b.back());
            b = detail::rp_scale(std::move(b), 1 / s);
        }
    }
    return chain;
}

int sign_at_infinity(const IntPolynomial& p, bool positive) {
    if (p.is_zero()) return 0;
    int s = sgn(p.leading());
    if (!positive && p.degree() % 2 == 1) s = -s;
    return s;
}

int variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int variations_at(const std::vector<IntPolynomial>& chain, const Bound& b) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) {
        switch (b.kind) {
            case Bound::Kind::finite: signs.push_back(sign_at(p, b.value)); break;
            case Bound::Kind::neg_infinity: signs.push_back(sign_at_infinity(p, false)); break;
            case Bound::Kind::pos_infinity: signs.push_back(sign_at_infinity(p, true)); break;
        }
    }
    return variations(signs);
}

// x - v as a primitive integer polynomial (den*x - num).
IntPolynomial linear_for(const mpq_class& v) {
    return IntPolynomial({mpz_class(-v.get_num()), mpz_class(v.get_den())});
}

// Strict upper bound on |roots|.
mpq_class cauchy_bound(const IntPolynomial& p) {
    mpq_class m = 0;
    for (int i = 0; i < p.degree(); ++i) {
        mpq_class q = abs(mpq_class(p.coeff(i))) / abs(mpq_class(p.leading()));
        if (q > m) m = q;
    }
    return m + 1;
}

std::vector<mpz_class> divisors(const mpz_class& value) {
    // plain trial division; desk-scale coefficients only
    std::vector<mpz_class> primes, expo;
    mpz_class v = abs(value);
    if (v == 0 || v == 1) return {1};
    mpz_class d = 2;
    long steps = 0;
    while (d * d <= v) {
        if (++steps > 2000000)
            throw BudgetError("divisors: coefficient too large to factor");
        if (v % d == 0) {
            primes.push_back(d);
            expo.push_back(0);
            while (v % d == 0) {
                v /= d;
                ++expo.back();
            }
        }
        d += (d == 2) ? 1 : 2;
    }
    if (v > 1) {
        primes.push_back(v);
        expo.push_back(1);
    }
    std::vector<mpz_class> out{1};
    for (std::size_t i = 0; i < primes.size(); ++i) {
        std::size_t base = out.size();
        mpz_class pw = 1;
        for (mpz_class e = 0; e < expo[i]; ++e) {
            pw *= primes[i];
            for (std::size_t j = 0; j < base; ++j)
                out.push_back(out[j] * pw);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool bound_below(const Bound& lo, const mpq_class& v) {
    // is v inside from the left?
    if (lo.kind == Bound::Kind::neg_infinity) return true;
    if (lo.kind == Bound::Kind::pos_infinity) return false;
    return lo.closed ? v >= lo.value : v > lo.value;
}

bool bound_above(const Bound& hi, const mpq_class& v) {
    if (hi.kind == Bound::Kind::pos_infinity) return true;
    if (hi.kind == Bound::Kind::neg_infinity) return false;
    return hi.closed ? v <= hi.value : v < hi.value;
}

} // namespace

int count_real_roots(const IntPolynomial& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero())
        throw DomainError("count_real_roots: zero polynomial");
    if (p.degree() == 0) return 0;
    if (lo.kind == Bound::Kind::finite && hi.kind == Bound::Kind::finite) {
        if (lo.value > hi.value) return 0;
        if (lo.value == hi.value)
            return (lo.closed && hi.closed && sign_at(p, lo.value) == 0) ? 1 : 0;
    }
    // deflate roots sitting exactly on finite endpoints
    IntPolynomial q = p;
    for (const Bound* b : {&lo, &hi}) {
        if (b->kind != Bound::Kind::finite) continue;
        while (q.degree() > 0 && sign_at(q, b->value) == 0)
            q = exact_divide(q, linear_for(b->value));
    }
    int base = 0;
    if (q.degree() > 0) {
        auto chain = sturm_chain(q);
        base = variations_at(chain, lo) - variations_at(chain, hi);
    }
    if (lo.kind == Bound::Kind::finite && lo.closed && sign_at(p, lo.value) == 0) ++base;
    if (hi.kind == Bound::Kind::finite && hi.closed && sign_at(p, hi.value) == 0) ++base;
    return base;
}

bool all_roots_real(const IntPolynomial& p) {
    if (p.is_zero())
        throw DomainError("all_roots_real: zero polynomial");
    if (p.degree() <= 0) return true;
    for (const auto& sf : squarefree_decompose(p).factors)
        if (count_real_roots(sf.factor, Bound::minus_infinity(), Bound::plus_infinity()) !=
            sf.factor.degree())
            return false;
    return true;
}

std::vector<mpq_class> rational_roots(const IntPolynomial& p) {
    if (p.is_zero())
        throw DomainError("rational_roots: zero polynomial");
    std::vector<mpq_class> out;
    if (p.degree() <= 0) return out;
    int low = 0;
    while (p.coeff(low) == 0) ++low;
    if (low > 0) out.push_back(0);
    auto nums = divisors(p.coeff(low));
    auto dens = divisors(p.leading());
    for (const auto& n : nums) {
        for (const auto& d : dens) {
            mpq_class cand(n, d);
            cand.canonicalize();
            for (int s : {1, -1}) {
                mpq_class r = s * cand;
                if (sign_at(p, r) == 0 && std::find(out.begin(), out.end(), r) == out.end())
                    out.push_back(r);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void refine_bracket(const IntPolynomial& f, mpq_class& low, mpq_class& high,
                    const mpq_class& width) {
    int sl = sign_at(f, low);
    int sh = sign_at(f, high);
    if (sl * sh >= 0)
        throw DomainError("refine_bracket: endpoints do not bracket a sign change");
    while (high - low > width) {
        mpq_class mid = (low + high) / 2;
        int sm = sign_at(f, mid);
        if (sm == 0) {
            // rational root hit dead-centre: shrink to a point
            low = mid;
            high = mid;
            return;
        }
        if (sm == sl)
            low = mid;
        else
            high = mid;
    }
}

std::vector<IsolatedRoot> isolate_and_refine(const IntPolynomial& p,
                                             const Bound& lo, const Bound& hi,
                                             const mpq_class& tol) {
    if (p.is_zero())
        throw DomainError("isolate_and_refine: zero polynomial");
    if (tol <= 0)
        throw DomainError("isolate_and_refine: tolerance must be positive");
    if (p.degree() <= 0) return {};
    const int digits = digits_for_tolerance(tol);

    struct Pending {
        IsolatedRoot root;
        IntPolynomial factor; // zero for exact rational roots
    };
    std::vector<Pending> found;

    for (const auto& sf : squarefree_decompose(p).factors) {
        IntPolynomial f = sf.factor;
        // exact rational roots first
        for (const auto& r : rational_roots(f)) {
            if (bound_below(lo, r) && bound_above(hi, r)) {
                Pending item;
                item.root.low = item.root.high = r;
                item.root.multiplicity = sf.multiplicity;
                item.root.exact = true;
                item.root.factor = linear_for(r);
                found.push_back(std::move(item));
            }
            f = exact_divide(f, linear_for(r));
        }
        if (f.degree() <= 0) continue;
        // all remaining roots are irrational, so no rational point is a
        // root of f and open/closed endpoint distinctions do not matter
        mpq_class big = cauchy_bound(f);
        mpq_class a = lo.kind == Bound::Kind::finite ? lo.value : -big;
        mpq_class b = hi.kind == Bound::Kind::finite ? hi.value : big;
        if (a >= b) continue;
        auto chain = sturm_chain(f);
        auto count_open = [&](const mpq_class& x, const mpq_class& y) {
            return variations_at(chain, Bound::open(x)) -
                   variations_at(chain, Bound::open(y));
        };
        std::function<void(const mpq_class&, const mpq_class&)> isolate =
            [&](const mpq_class& x, const mpq_class& y) {
                int k = count_open(x, y);
                if (k == 0) return;
                if (k == 1) {
                    Pending item;
                    item.root.low = x;
                    item.root.high = y;
                    item.root.multiplicity = sf.multiplicity;
                    item.factor = f;
                    item.root.factor = f;
                    refine_bracket(f, item.root.low, item.root.high, tol);
                    item.root.exact = (item.root.low == item.root.high);
                    found.push_back(std::move(item));
                    return;
                }
                mpq_class mid = (x + y) / 2;
                isolate(x, mid);
                isolate(mid, y);
            };
        isolate(a, b);
    }

    // separate any overlapping intervals; roots from coprime square-free
    // factors are distinct reals, so repeated halving always succeeds
    for (int pass = 0; pass < 512; ++pass) {
        bool overlap = false;
        for (std::size_t i = 0; i < found.size() && !overlap; ++i)
            for (std::size_t j = i + 1; j < found.size() && !overlap; ++j) {
                auto& a = found[i].root;
                auto& b = found[j].root;
                if (a.high < b.low || b.high < a.low) continue;
                overlap = true;
                for (auto* item : {&found[i], &found[j]}) {
                    if (item->root.exact) continue;
                    mpq_class half = (item->root.high - item->root.low) / 2;
                    refine_bracket(item->factor, item->root.low, item->root.high, half);
                    item->root.exact = (item->root.low == item->root.high);
                }
            }
        if (!overlap) break;
        if (pass == 511)
            throw DomainError("isolate_and_refine: could not separate roots");
    }

    std::vector<IsolatedRoot> out;
    out.reserve(found.size());
    for (auto& item : found) {
        item.root.approx = decimal_string((item.root.low + item.root.high) / 2, digits);
        out.push_back(std::move(item.root));
    }
    std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        return a.low < b.low || (a.low == b.low && a.high < b.high);
    });
    return out;
}

} // namespace flowroots
