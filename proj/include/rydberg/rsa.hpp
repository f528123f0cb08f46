#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "rydberg/core_model.hpp"
#include "rydberg/quadrature.hpp"

namespace rydberg {

struct SimConfig {
  std::int64_t length = 0;
  int b = 1;
  int trials = 1;
  std::uint64_t seed = 0;
  bool keep_per_trial = false;
};

struct SimSummary {
  double mean_density = 0.0;
  double std_error = 0.0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> per_trial;  // filled when keep_per_trial is set
};

/// Trial t draws from mt19937_64 seeded with child_seed(master, t); the
/// splitmix64 finalizer below is the fixed mixing rule, so trials are
/// reproducible independently of execution order.
std::uint64_t child_seed(std::uint64_t master_seed, std::uint64_t trial_index);

/// Random sequential excitation to jamming: each step picks uniformly among
/// the currently excitable sites (tracked incrementally; exciting a site
/// retires at most 2b+1 candidates), so a trial costs O(L). The selection
/// law is identical to rejection sampling over all neutral sites.
SimSummary simulate_rsa(const SimConfig& config);

/// Single trial materialized as a configuration (for inspection and tests).
Configuration simulate_rsa_trial(std::int64_t length, const ModelParams& params,
                                 std::uint64_t trial_seed);

/// Jamming limit of the blockade model:
///   rho_inf = int_0^1 exp[-2 sum_{j=1}^{b} (1-y^j)/j] dy.
QuadratureResult jamming_limit_quadrature(const ModelParams& params, double tol = 1e-10);

/// k-mer jamming limit k * rho_inf(b = k-1); the equivalent exponential-form
/// integral k * int_0^inf exp[-u - 2 sum_{j<k} (1-e^{-ju})/j] du is evaluated
/// as well and the two are required to agree to 1e-9.
QuadratureResult kmer_jamming_limit(int k, double tol = 1e-10);

/// Renyi's parking constant int_0^inf exp[-2 int_0^y (1-e^{-x})/x dx] dy
/// = 0.7475979202... The inner integrand extends continuously with value 1
/// at x = 0 and equals 1/x to machine precision for x > 45, which gives the
/// exact continuation I(y) = I(45) + ln(y/45); the outer tail beyond Y = 50
/// is integrated after the substitution u = 1/y (the transformed integrand
/// is flat near u = 0), so no analytic tail constant enters.
QuadratureResult renyi_constant(double tol = 1e-8);

struct ScaledJammingRow {
  int b;
  double b_rho_inf;
};

/// b * rho_inf for b = 1..b_max via the substituted form
///   int_0^b exp[-2 int_0^y (1-(1-x/b)^b)/x dx] dy,
/// cross-checked against b times the direct integral to 1e-8.
std::vector<ScaledJammingRow> scaled_limit_table(int b_max, double tol = 1e-10);

/// CSV with header b,rho_inf,rho_star,b_rho_inf,b_rho_star (15 significant
/// digits), one row per blockade range.
void write_comparison_csv(std::ostream& os, int b_max, double tol = 1e-10);

}  // namespace rydberg
