#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <vector>

#include "rydberg/core_model.hpp"

namespace rydberg {

/// -sum p_i ln p_i with the explicit 0 ln 0 = 0 branch. Requires p_i >= 0
/// summing to 1 within 1e-12.
double shannon_entropy(std::span<const double> p);

/// N! / prod M_a! for a gap profile summing to N.
mpz_class multinomial(std::int64_t n, std::span<const std::int64_t> profile);

/// All lattice points (M_0..M_b) with sum M_a = N and sum a M_a = L-(b+1)N.
struct FeasibleSet {
  std::int64_t n = 0;
  std::int64_t l = 0;
  int b = 0;
  std::vector<std::vector<std::int64_t>> points;

  bool empty() const { return points.empty(); }
};

FeasibleSet feasible_set(std::int64_t n, std::int64_t l, const ModelParams& params);

struct DiscreteEstimate {
  bool feasible = false;
  double value = 0.0;                // max of (N/L) H(M/N) over the feasible set
  std::vector<std::int64_t> argmax;  // maximizing profile
};

/// Discrete entropy maximization over the feasible set. Exhaustive when the
/// set has fewer than 10^6 points; otherwise starts from the rounded
/// continuous optimizer and hill-climbs with constraint-preserving +-1 moves.
DiscreteEstimate discrete_complexity_estimate(std::int64_t n, std::int64_t l,
                                              const ModelParams& params);

/// ln J_{N,L} / L from the exact big-integer count; throws std::domain_error
/// when the count is zero.
double exact_log_density(std::int64_t n, std::int64_t l, const ModelParams& params);

/// Stationary point of the constrained entropy maximization at density rho:
/// geometric weights p_i = p_0 z^i with z from the complexity polynomial,
/// mu = -rho ln z, lambda = -rho (1 - ln(1 + z + ... + z^b)).
struct LagrangeSolution {
  double rho = 0.0;
  double lambda = 0.0;
  double mu = 0.0;
  double z = 0.0;
  std::vector<double> p_star;
  bool degenerate = false;  // rho at the right support edge: p = (1, 0, ..., 0)

  /// rho + lambda + mu (1/rho - (b+1)); the mu term is dropped when its
  /// coefficient vanishes (degenerate edge, where mu is infinite).
  double complexity_from_multipliers() const;
};

/// Throws std::domain_error outside [1/(2b+1), 1/(b+1)] (open at the left
/// edge); verifies both constraints to 1e-10 before returning.
LagrangeSolution continuous_optimizer(const ModelParams& params, double rho);

}  // namespace rydberg
