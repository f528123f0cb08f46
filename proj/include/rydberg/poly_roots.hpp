#pragma once

#include <span>
#include <vector>

namespace rydberg {

/// All positive real roots of the polynomial with ascending real
/// coefficients, each accurate to a few ulp. Isolation scans for sign
/// changes on a geometric grid over (z_lo, z_hi] where z_hi is the Cauchy
/// upper bound 1 + max|c_i/c_deg| and z_lo the matching lower bound; each
/// bracket is refined by bisection to width max(bisect_tol, 4 ulp) and
/// polished with one Newton step. Exact grid-point roots are kept too.
std::vector<double> positive_real_roots(std::span<const double> coeffs,
                                        double bisect_tol = 1e-14);

/// Horner evaluation.
double poly_eval(std::span<const double> coeffs, double z);

}  // namespace rydberg
