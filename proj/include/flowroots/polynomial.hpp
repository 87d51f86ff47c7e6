#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <vector>

namespace flowroots {

// Dense univariate polynomial with exact integer coefficients,
// coeffs()[i] being the coefficient of x^i.  Trailing zeros are stripped,
// so the zero polynomial has an empty coefficient vector and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial zero() { return {}; }
    static IntPolynomial one() { return {1}; }
    static IntPolynomial x() { return {0, 1}; }
    // x - a
    static IntPolynomial x_minus(long a) { return {-a, 1}; }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int i) const;
    const mpz_class& leading() const;

    bool operator==(const IntPolynomial&) const = default;
    IntPolynomial operator+(const IntPolynomial&) const;
    IntPolynomial operator-(const IntPolynomial&) const;
    IntPolynomial operator*(const IntPolynomial&) const;
    IntPolynomial operator-() const;

private:
    std::vector<mpz_class> c_;
};

// Exact quotient; throws DomainError if b does not divide a in Z[x].
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial derivative(const IntPolynomial& p);
IntPolynomial pow(const IntPolynomial& p, int e);

// gcd of the |coefficients| (non-negative; 0 for the zero polynomial).
mpz_class content(const IntPolynomial& p);
// p divided by its signed content; the result has positive leading
// coefficient.  Zero stays zero.
IntPolynomial primitive_part(const IntPolynomial& p);

// Primitive gcd with positive leading coefficient.
IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);

mpz_class evaluate(const IntPolynomial& p, const mpz_class& x);
mpq_class evaluate(const IntPolynomial& p, const mpq_class& x);
// -1, 0, +1
int sign_at(const IntPolynomial& p, const mpq_class& x);

// p == unit * prod factors[i]^multiplicity[i], the factors primitive,
// square-free, pairwise coprime, with positive leading coefficients and
// strictly increasing multiplicities.
struct SquarefreeFactor {
    IntPolynomial factor;
    int multiplicity = 1;
};
struct SquarefreeDecomposition {
    mpz_class unit; // signed content of the input
    std::vector<SquarefreeFactor> factors;
};
// Pre: p != 0.
SquarefreeDecomposition squarefree_decompose(const IntPolynomial& p);

// Divide out (x - s) as often as possible for each requested integer s.
struct IntegerRootStrip {
    std::map<long, int> multiplicity; // one entry per requested root
    IntPolynomial remainder;
};
IntegerRootStrip strip_integer_roots(const IntPolynomial& p,
                                     const std::vector<long>& roots);

} // namespace flowroots
