#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "flowroots/polynomial.hpp"

namespace flowroots {

// One endpoint of a real interval.
struct Bound {
    enum class Kind { finite, neg_infinity, pos_infinity };
    Kind kind = Kind::finite;
    mpq_class value;    // finite only
    bool closed = false; // finite only

    static Bound open(const mpq_class& v) { return {Kind::finite, v, false}; }
    static Bound closed_at(const mpq_class& v) { return {Kind::finite, v, true}; }
    static Bound minus_infinity() { return {Kind::neg_infinity, 0, false}; }
    static Bound plus_infinity() { return {Kind::pos_infinity, 0, false}; }
};

// Number of distinct real roots of p in the interval, by Sturm's theorem
// (endpoint roots handled exactly).  Pre: p != 0.
int count_real_roots(const IntPolynomial& p, const Bound& lo, const Bound& hi);

// True iff every root of p (over C) is real.  Pre: p != 0.
bool all_roots_real(const IntPolynomial& p);

// An isolated real root: exact when low == high (rational root), else an
// open bracketing interval with a sign change whose width is at most the
// requested tolerance.  `approx` is a truncated decimal of the midpoint.
// `factor` is a square-free polynomial with this root: the linear
// (q x - p) for an exact root p/q, otherwise the rational-root-free
// square-free factor the bracket was isolated from (usable with
// refine_bracket to narrow further).
struct IsolatedRoot {
    mpq_class low, high;
    int multiplicity = 1;
    std::string approx;
    bool exact = false;
    IntPolynomial factor;
};

// All real roots of p in the interval, ascending, with multiplicities
// from the square-free decomposition.  Rational roots are found by
// rational-root testing on the square-free factors and reported exactly;
// the isolating intervals of distinct roots are pairwise disjoint.
// Pre: p != 0; tol > 0.
std::vector<IsolatedRoot> isolate_and_refine(const IntPolynomial& p,
                                             const Bound& lo, const Bound& hi,
                                             const mpq_class& tol);

// All rational roots of a nonzero polynomial (ascending, no multiplicity).
std::vector<mpq_class> rational_roots(const IntPolynomial& p);

// Shrink a sign-change bracket of f by bisection until high - low <= width.
// Pre: sign_at(f, low) * sign_at(f, high) < 0.
void refine_bracket(const IntPolynomial& f, mpq_class& low, mpq_class& high,
                    const mpq_class& width);

} // namespace flowroots
