#pragma once

#include <vector>

#include "rydberg/core_model.hpp"

namespace rydberg {

/// Coefficients c_i = i + b + 1 - 1/rho, i = 0..b, of the degree-b polynomial
/// whose positive real root determines the complexity at density rho.
/// Inside the open support interval c_0 < 0 < c_b, so a positive real root
/// always exists; the coefficients increase strictly in i, so it is unique.
struct PolynomialSpec {
  int b;
  double rho;
  std::vector<double> coeffs;
};

PolynomialSpec complexity_polynomial(const ModelParams& params, double rho);

struct ComplexityPoint {
  double rho = 0.0;
  double z = 0.0;   // selected root (NaN outside the support, 0 at rho = 1/(b+1))
  double f = 0.0;   // nats per site
  std::vector<double> root_candidates;
};

/// Configurational entropy f(rho) of jammed configurations:
///   f = rho * [ ln(1 + z + ... + z^b) - (1/rho - (b+1)) ln z ]
/// at the positive root z of the spec polynomial; zero outside
/// (1/(2b+1), 1/(b+1)]. The geometric-sum form keeps z = 1 regular.
ComplexityPoint complexity(const ModelParams& params, double rho);

/// Explicit b = 1 formula, valid on (1/3, 1/2); throws std::domain_error outside.
double complexity_closed_b1(double rho);

/// Explicit b = 2 formula (with the sqrt(-44 rho^2 + 24 rho - 3) radical),
/// valid on (1/5, 1/3); throws std::domain_error outside. Evaluated in long
/// double: the expression passes through a removable 0/0 at rho = 1/4.
double complexity_closed_b2(double rho);

struct EquilibriumDensity {
  int b;
  double z_star;    // unique root in (0,1) of z^{2b+1} + ... + z^{b+1} - 1
  double rho_star;  // density maximizing f
  double f_at_star; // equals ln w_b
};

EquilibriumDensity rho_star(const ModelParams& params);

/// k-mer deposition complexity at coverage rho: the blockade model at
/// (b, rho) = (k-1, rho/k). The corollary's own expression is evaluated
/// as a redundant cross-check away from z = 1.
double kmer_complexity(int k, double rho);

/// Equilibrium coverage of the k-mer model: k * rho_star(k-1).
double kmer_rho_star(int k);

struct ScaledLimits {
  int b;
  double b_rho_star;
  double b_rho_inf;
};

/// b * rho_star and b * rho_inf for b = 1..b_max (the two sequences whose
/// large-b limits are 1 and the parking constant 0.7475979202...).
std::vector<ScaledLimits> b_scaled_limits(int b_max, double quad_tol = 1e-10);

}  // namespace rydberg
