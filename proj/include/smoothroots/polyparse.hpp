#pragma once

#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "smoothroots/factor.hpp"
#include "smoothroots/symmetric.hpp"

namespace smoothroots {

// Polynomial in x and t with rational coefficients, keyed by (deg_x, deg_t).
using BiPoly = std::map<std::pair<int, int>, mpq_class>;

// Grammar (whitespace is ignored):
//   poly   = [sign] term { sign term }
//   sign   = "+" | "-"
//   term   = factor { ["*"] factor }
//   factor = atom [ "^" integer ]
//   atom   = number | "x" | "t" | "(" poly ")"
//   number = integer [ "/" integer ]
// Throws InputError with the offending position.
BiPoly parse_bipoly(const std::string& text);

// Monic curve in x of the given truncation order. The leading x coefficient
// must be a nonzero constant; the curve is divided by it.
PolyCurve parse_poly_curve(const std::string& text, int order);

// As above, for a polynomial in x only.
PolyCoeffs parse_poly_coeffs(const std::string& text);

}  // namespace smoothroots
