#include "rydberg/complexity.hpp"

#include <cmath>
#include <iostream>
#include <limits>
#include <stdexcept>

#include "rydberg/poly_roots.hpp"
#include "rydberg/rsa.hpp"

namespace rydberg {

namespace {

// ln(1 + z + ... + z^b), stable for any z > 0 (folds large z through 1/z).
double log_geo_sum(double z, int b) {
  if (z <= 1.0) {
    double geo = 0.0;
    for (int i = b; i >= 0; --i) geo = geo * z + 1.0;
    return std::log(geo);
  }
  const double w = 1.0 / z;
  double geo = 0.0;
  for (int i = b; i >= 0; --i) geo = geo * w + 1.0;
  return b * std::log(z) + std::log(geo);
}

double f_at_root(double rho, double z, int b) {
  return rho * (log_geo_sum(z, b) - (1.0 / rho - (b + 1)) * std::log(z));
}

}  // namespace

PolynomialSpec complexity_polynomial(const ModelParams& params, double rho) {
  if (!(rho > 0.0)) throw std::domain_error("complexity polynomial needs rho > 0");
  PolynomialSpec spec;
  spec.b = params.b;
  spec.rho = rho;
  spec.coeffs.resize(params.b + 1);
  const double inv_rho = 1.0 / rho;
  for (int i = 0; i <= params.b; ++i)
    spec.coeffs[i] = static_cast<double>(i + params.b + 1) - inv_rho;
  return spec;
}

ComplexityPoint complexity(const ModelParams& params, double rho) {
  if (rho < 0.0 || rho > 1.0) throw std::domain_error("density must lie in [0, 1]");
  const int b = params.b;
  ComplexityPoint pt;
  pt.rho = rho;
  pt.f = 0.0;
  pt.z = std::numeric_limits<double>::quiet_NaN();

  const double lo = 1.0 / (2 * b + 1);
  if (rho <= lo) return pt;

  const PolynomialSpec spec = complexity_polynomial(params, rho);
  if (spec.coeffs[0] >= 0.0) {
    // 1/rho <= b+1: at the right end of the support z = 0 and f = 0;
    // strictly beyond it f is identically zero with no root to report.
    if (spec.coeffs[0] <= (b + 1) * 1e-12) pt.z = 0.0;
    return pt;
  }

  pt.root_candidates = positive_real_roots(spec.coeffs);
  if (pt.root_candidates.empty())
    throw std::logic_error("no positive real root of the complexity polynomial inside the "
                           "support: this cannot happen (sign change c_0 < 0 < c_b)");
  if (pt.root_candidates.size() > 1)
    std::cerr << "complexity: " << pt.root_candidates.size()
              << " positive roots at b=" << b << " rho=" << rho << " (expected one)\n";

  pt.f = -std::numeric_limits<double>::infinity();
  for (double z : pt.root_candidates) {
    const double f = f_at_root(rho, z, b);
    if (f > pt.f) {
      pt.f = f;
      pt.z = z;
    }
  }
  if (pt.f < -1e-9)
    throw std::logic_error("complexity evaluated negative beyond rounding: root finding failed");
  if (pt.f < 0.0) pt.f = 0.0;
  return pt;
}

double complexity_closed_b1(double rho) {
  if (!(rho > 1.0 / 3.0 && rho < 0.5))
    throw std::domain_error("closed-form b=1 complexity is defined on (1/3, 1/2)");
  const long double r = rho;
  const long double f =
      r * std::log(r) - (1.0L - 2.0L * r) * std::log(1.0L - 2.0L * r) -
      (3.0L * r - 1.0L) * std::log(3.0L * r - 1.0L);
  return static_cast<double>(f);
}

double complexity_closed_b2(double rho) {
  if (!(rho > 0.2 && rho < 1.0 / 3.0))
    throw std::domain_error("closed-form b=2 complexity is defined on (1/5, 1/3)");
  const long double r = rho;
  const long double disc = -44.0L * r * r + 24.0L * r - 3.0L;
  if (disc <= 0.0L) throw std::domain_error("negative discriminant outside (1/5, 1/3)");
  const long double s = std::sqrt(disc);

  const long double term1 =
      (3.0L * r - 1.0L) * std::log((s - 4.0L * r + 1.0L) / (10.0L * r - 2.0L));
  const long double num =
      -350.0L * r * r * r + (25.0L * r * r - 10.0L * r + 1.0L) * s + 215.0L * r * r -
      44.0L * r + 3.0L;
  const long double den = r * r * s - 134.0L * r * r * r + 57.0L * r * r - 6.0L * r;
  const long double term2 = r * std::log(num / den);
  return static_cast<double>(term1 - term2);
}

EquilibriumDensity rho_star(const ModelParams& params) {
  const int b = params.b;
  // q(z) = z^{b+1} (1 + z + ... + z^b) - 1, strictly increasing on (0,1)
  const auto q = [b](double z) {
    double geo = 0.0;
    for (int i = b; i >= 0; --i) geo = geo * z + 1.0;
    return std::pow(z, b + 1) * geo - 1.0;
  };
  double lo = 0.0, hi = 1.0;
  while (hi - lo > 1e-14) {
    const double mid = 0.5 * (lo + hi);
    (q(mid) < 0.0 ? lo : hi) = mid;
  }
  const double z = 0.5 * (lo + hi);

  const double zb1 = std::pow(z, b + 1);
  const double num = (1.0 - z) * (1.0 - zb1);
  const double den = 1.0 + b * (1.0 - z) * (1.0 - 2.0 * zb1) - zb1 * (2.0 - z);
  EquilibriumDensity eq;
  eq.b = b;
  eq.z_star = z;
  eq.rho_star = num / den;
  eq.f_at_star = complexity(params, eq.rho_star).f;
  return eq;
}

double kmer_complexity(int k, double rho) {
  if (k < 2) throw std::invalid_argument("k-mer size must be >= 2");
  if (rho < 0.0 || rho > 1.0) throw std::domain_error("coverage must lie in [0, 1]");
  const ModelParams params(k - 1);
  const ComplexityPoint pt = complexity(params, rho / k);

  // redundant check against the corollary's own expression (raw ratio form,
  // which is singular at z = 1, so skip a neighborhood; powers of large z
  // overflow, so skip those too)
  if (pt.f > 0.0 && std::isfinite(pt.z) && std::abs(pt.z - 1.0) > 1e-3 && pt.z < 50.0) {
    const double z = pt.z;
    const double direct =
        rho / k *
        (-std::log((1.0 - z) / (1.0 - std::pow(z, k))) - (k / rho - k) * std::log(z));
    if (std::abs(direct - pt.f) > 1e-12)
      throw std::logic_error("k-mer complexity cross-check failed");
  }
  return pt.f;
}

double kmer_rho_star(int k) {
  if (k < 2) throw std::invalid_argument("k-mer size must be >= 2");
  return k * rho_star(ModelParams(k - 1)).rho_star;
}

std::vector<ScaledLimits> b_scaled_limits(int b_max, double quad_tol) {
  if (b_max < 1) throw std::invalid_argument("b_max must be >= 1");
  std::vector<ScaledLimits> table;
  table.reserve(b_max);
  for (int b = 1; b <= b_max; ++b) {
    const ModelParams params(b);
    ScaledLimits row;
    row.b = b;
    row.b_rho_star = b * rho_star(params).rho_star;
    row.b_rho_inf = b * jamming_limit_quadrature(params, quad_tol).value;
    table.push_back(row);
  }
  return table;
}

}  // namespace rydberg
