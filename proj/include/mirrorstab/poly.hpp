#pragma once

#include "mirrorstab/numeric.hpp"

#include <vector>

namespace mirrorstab {

/// Dense univariate polynomial over Cplx: coeffs[i] is the x^i coefficient.
using CVec = std::vector<Cplx>;
using CMat = std::vector<std::vector<Cplx>>;

Cplx poly_eval(const CVec& coeffs, const Cplx& x);
CVec poly_derivative(const CVec& coeffs);

/// All complex roots (with multiplicity) via Aberth–Ehrlich simultaneous
/// iteration.  Initial guesses come from the Newton-polygon (upper convex
/// hull of (i, log|c_i|)), which keeps the iteration stable for the wildly
/// scaled coefficients produced by resultant elimination.  Near-zero leading
/// coefficients (relative threshold) are stripped as roots at infinity;
/// near-zero constant terms are deflated as exact zero roots and returned.
/// Deterministic: no randomness, fixed iteration order.
std::vector<Cplx> poly_roots(const CVec& coeffs);

/// Determinant via LU with partial pivoting.
Cplx lu_det(CMat a);

/// Solve a x = b for square a.
CVec lu_solve(CMat a, CVec b);

/// Coefficients of the unique interpolant of degree n-1 through
/// (xs[j], vals[j]), j = 0..n-1.
CVec vandermonde_interpolate(const std::vector<Cplx>& xs,
                             const std::vector<Cplx>& vals);

} // namespace mirrorstab
