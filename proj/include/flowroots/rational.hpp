#pragma once

#include <gmpxx.h>

#include <string>

namespace flowroots {

// Accepts "p/q", plain integers, and decimal/scientific forms such as
// "1.5", "-0.25", "1e-9".  Throws ParseError on anything else.
mpq_class parse_rational(const std::string& text);

// "p/q" (or just "p" for integers); exact.
std::string rational_string(const mpq_class& v);

// Decimal expansion truncated toward zero after `digits` fractional
// digits, e.g. decimal_string(mpq_class(1,3), 4) == "0.3333".
std::string decimal_string(const mpq_class& v, int digits);

// Smallest number of fractional digits whose resolution is at least as
// fine as `tol`, i.e. the least d with 10^-d <= tol (at least 1, capped
// at 64).
int digits_for_tolerance(const mpq_class& tol);

} // namespace flowroots
