#pragma once

// Internal dense polynomials over mpq_class, shared by the integer
// polynomial arithmetic and the Sturm machinery.  Desk-scale degrees, so
// plain rational Euclid is fine and keeps the code obviously correct.

#include <gmpxx.h>

#include <vector>

#include "flowroots/polynomial.hpp"

namespace flowroots::detail {

using RatPoly = std::vector<mpq_class>; // [i] = coefficient of x^i

inline void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int rp_degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline RatPoly rp_from(const IntPolynomial& p) {
    RatPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return out;
}

inline RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    rp_trim(out);
    return out;
}

inline RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    rp_trim(out);
    return out;
}

inline RatPoly rp_scale(RatPoly p, const mpq_class& s) {
    for (auto& c : p) c *= s;
    rp_trim(p);
    return p;
}

inline RatPoly rp_derivative(const RatPoly& p) {
    RatPoly out;
    for (std::size_t i = 1; i < p.size(); ++i)
        out.push_back(p[i] * static_cast<long>(i));
    rp_trim(out);
    return out;
}

// a = q*b + r with deg r < deg b; b must be nonzero.
inline void rp_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    q.clear();
    r = a;
    rp_trim(r);
    const int db = rp_degree(b);
    if (db < 0) {
        q.clear();
        r.clear();
        return; // caller guards; zero divisor
    }
    if (rp_degree(r) < db) return;
    q.assign(rp_degree(r) - db + 1, 0);
    while (rp_degree(r) >= db) {
        int shift = rp_degree(r) - db;
        mpq_class f = r.back() / b.back();
        q[shift] = f;
        for (int i = 0; i <= db; ++i)
            r[shift + i] -= f * b[i];
        rp_trim(r);
    }
}

// monic gcd (empty for gcd of zeros)
inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
    rp_trim(a);
    rp_trim(b);
    while (!b.empty()) {
        RatPoly q, r;
        rp_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
        if (!b.empty()) {
            mpq_class inv = 1 / b.back(); // keep coefficients small
            b = rp_scale(std::move(b), inv);
        }
    }
    if (!a.empty())
        a = rp_scale(std::move(a), 1 / a.back());
    return a;
}

// Clear denominators and divide by the content: primitive integer image
// with positive leading coefficient.  Zero maps to zero.
inline IntPolynomial rp_primitive(const RatPoly& p) {
    if (p.empty()) return IntPolynomial::zero();
    mpz_class denom = 1;
    for (const auto& c : p)
        denom = denom / gcd(denom, c.get_den()) * c.get_den();
    std::vector<mpz_class> ints;
    ints.reserve(p.size());
    for (const auto& c : p) {
        mpq_class scaled = c * denom;
        ints.push_back(scaled.get_num());
    }
    return primitive_part(IntPolynomial(std::move(ints)));
}

} // namespace flowroots::detail
