#include "flowroots/polynomial.hpp"

#include <algorithm>

#include "flowroots/detail/ratpoly.hpp"
#include "flowroots/errors.hpp"

namespace flowroots {

using detail::RatPoly;

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

const mpz_class& IntPolynomial::leading() const {
    if (c_.empty())
        throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<mpz_class> out(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<mpz_class> out(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            out[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
    auto out = c_;
    for (auto& c : out) c = -c;
    return IntPolynomial(std::move(out));
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero())
        throw DomainError("exact_divide: division by zero polynomial");
    if (a.is_zero()) return {};
    RatPoly q, r;
    detail::rp_divmod(detail::rp_from(a), detail::rp_from(b), q, r);
    if (!r.empty())
        throw DomainError("exact_divide: nonzero remainder");
    std::vector<mpz_class> out;
    out.reserve(q.size());
    for (const auto& c : q) {
        if (c.get_den() != 1)
            throw DomainError("exact_divide: quotient not integral");
        out.push_back(c.get_num());
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial derivative(const IntPolynomial& p) {
    std::vector<mpz_class> out;
    for (int i = 1; i <= p.degree(); ++i)
        out.push_back(p.coeff(i) * i);
    return IntPolynomial(std::move(out));
}

IntPolynomial pow(const IntPolynomial& p, int e) {
    if (e < 0)
        throw DomainError("pow: negative exponent");
    IntPolynomial out = IntPolynomial::one();
    for (int i = 0; i < e; ++i) out = out * p;
    return out;
}

mpz_class content(const IntPolynomial& p) {
    mpz_class g = 0;
    for (const auto& c : p.coeffs())
        g = gcd(g, c);
    return abs(g);
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return {};
    mpz_class g = content(p);
    if (sgn(p.leading()) < 0) g = -g;
    std::vector<mpz_class> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        out.push_back(c / g);
    return IntPolynomial(std::move(out));
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    return detail::rp_primitive(detail::rp_gcd(detail::rp_from(a), detail::rp_from(b)));
}

mpz_class evaluate(const IntPolynomial& p, const mpz_class& x) {
    mpz_class acc = 0;
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * x + p.coeff(i);
    return acc;
}

mpq_class evaluate(const IntPolynomial& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * x + p.coeff(i);
    return acc;
}

int sign_at(const IntPolynomial& p, const mpq_class& x) {
    // homogeneous evaluation: sign of sum c_i p^i q^(n-i), avoids big
    // rational reductions
    if (p.is_zero()) return 0;
    const mpz_class& num = x.get_num();
    const mpz_class& den = x.get_den();
    mpz_class acc = 0;
    mpz_class dpow = 1;
    std::vector<mpz_class> numpow(p.degree() + 1);
    numpow[0] = 1;
    for (int i = 1; i <= p.degree(); ++i)
        numpow[i] = numpow[i - 1] * num;
    for (int i = p.degree(); i >= 0; --i) {
        acc += p.coeff(i) * numpow[i] * dpow;
        dpow *= den;
    }
    return sgn(acc);
}

SquarefreeDecomposition squarefree_decompose(const IntPolynomial& p) {
    if (p.is_zero())
        throw DomainError("squarefree_decompose: zero polynomial");
    SquarefreeDecomposition out;
    mpz_class cont = content(p);
    if (sgn(p.leading()) < 0) cont = -cont;
    out.unit = cont;
    IntPolynomial prim = primitive_part(p);
    if (prim.degree() <= 0)
        return out;

    // Yun's algorithm over Q, factors normalised back to primitive Z[x].
    RatPoly f = detail::rp_from(prim);
    RatPoly fd = detail::rp_derivative(f);
    RatPoly g = detail::rp_gcd(f, fd);
    RatPoly c, dummy;
    detail::rp_divmod(f, g, c, dummy);          // c1 = f / g
    RatPoly w, d;
    detail::rp_divmod(fd, g, w, dummy);         // f' / g
    d = detail::rp_sub(w, detail::rp_derivative(c)); // d1 = f'/g - c1'
    int i = 1;
    while (detail::rp_degree(c) > 0) {
        RatPoly a = detail::rp_gcd(c, d);
        IntPolynomial factor = detail::rp_primitive(a);
        if (factor.degree() > 0)
            out.factors.push_back({factor, i});
        RatPoly cnext, r;
        detail::rp_divmod(c, a, cnext, r);
        RatPoly y;
        detail::rp_divmod(d, a, y, r);
        d = detail::rp_sub(y, detail::rp_derivative(cnext));
        c = std::move(cnext);
        ++i;
    }

    // the decomposition must reproduce the input exactly
    IntPolynomial check{1};
    for (const auto& sf : out.factors)
        check = check * pow(sf.factor, sf.multiplicity);
    std::vector<mpz_class> scaled;
    for (const auto& cc : check.coeffs())
        scaled.push_back(cc * out.unit);
    if (IntPolynomial(std::move(scaled)) != p)
        throw DomainError("squarefree_decompose: internal verification failed");
    return out;
}

IntegerRootStrip strip_integer_roots(const IntPolynomial& p,
                                     const std::vector<long>& roots) {
    IntegerRootStrip out;
    out.remainder = p;
    for (long s : roots)
        out.multiplicity[s] = 0;
    if (p.is_zero())
        return out;
    for (long s : roots) {
        while (!out.remainder.is_zero() && evaluate(out.remainder, mpz_class(s)) == 0 &&
               out.remainder.degree() > 0) {
            out.remainder = exact_divide(out.remainder, IntPolynomial::x_minus(s));
            ++out.multiplicity[s];
        }
    }
    return out;
}

} // namespace flowroots
