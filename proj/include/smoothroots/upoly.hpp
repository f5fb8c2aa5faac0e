#pragma once

#include <utility>
#include <vector>

#include "smoothroots/number.hpp"

namespace smoothroots {

// Univariate polynomial in x with ascending coefficients c_0 + c_1 x + ...
using UPoly = std::vector<Scalar>;

namespace upoly {

void trim(UPoly& p);
int degree(const UPoly& p);  // -1 for the zero polynomial
Scalar eval(const UPoly& p, const Scalar& x);
UPoly add(const UPoly& a, const UPoly& b);
UPoly sub(const UPoly& a, const UPoly& b);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly scale(const UPoly& a, const Scalar& s);
UPoly derivative(const UPoly& p);
UPoly monic(const UPoly& p);
// Quotient and remainder; b must have a nonzero leading coefficient.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
// Monic gcd, intended for exact coefficients.
UPoly gcd(const UPoly& a, const UPoly& b);
bool exact(const UPoly& p);
bool is_zero(const UPoly& p);
UPoly from_roots(const std::vector<Scalar>& roots);

// Yun's square-free decomposition of an exact monic polynomial:
// p = prod f_i^i, returned as (f_i, i) with deg f_i > 0.
std::vector<std::pair<UPoly, int>> squarefree(const UPoly& p);

// Simultaneous Aberth-Ehrlich iteration at the working float precision.
// Returns deg(p) roots as complex floats.
std::vector<Scalar> aberth(const UPoly& p);

// All roots with multiplicity. Exact inputs go through the square-free
// decomposition first, so exactly repeated roots come back repeated, and roots
// that are small-denominator (Gaussian) rationals come back exact.
std::vector<Scalar> roots(const UPoly& p);

}  // namespace upoly
}  // namespace smoothroots
