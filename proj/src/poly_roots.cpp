#include "rydberg/poly_roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rydberg {

double poly_eval(std::span<const double> coeffs, double z) {
  double v = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * z + coeffs[i];
  return v;
}

namespace {

double poly_deriv_eval(std::span<const double> c, double z) {
  double v = 0.0;
  for (std::size_t i = c.size(); i-- > 1;) v = v * z + c[i] * static_cast<double>(i);
  return v;
}

double refine(std::span<const double> c, double lo, double hi, double flo, double tol) {
  while (hi - lo > std::max(tol, 4.0 * std::numeric_limits<double>::epsilon() * hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = poly_eval(c, mid);
    if (fm == 0.0) return mid;
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double z = 0.5 * (lo + hi);
  for (int it = 0; it < 2; ++it) {
    const double d = poly_deriv_eval(c, z);
    if (d == 0.0) break;
    const double step = poly_eval(c, z) / d;
    const double nz = z - step;
    if (!(nz > 0.0) || !std::isfinite(nz)) break;
    z = nz;
  }
  return z;
}

}  // namespace

std::vector<double> positive_real_roots(std::span<const double> coeffs, double bisect_tol) {
  std::vector<double> c(coeffs.begin(), coeffs.end());
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  std::vector<double> roots;
  if (c.size() <= 1) return roots;

  // factor out z^k so the constant term is nonzero (z = 0 is not positive)
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0.0) ++shift;
  c.erase(c.begin(), c.begin() + shift);
  if (c.size() <= 1) return roots;

  const std::size_t deg = c.size() - 1;
  double max_ratio_hi = 0.0, max_ratio_lo = 0.0;
  for (std::size_t i = 0; i < deg; ++i)
    max_ratio_hi = std::max(max_ratio_hi, std::abs(c[i] / c[deg]));
  for (std::size_t i = 1; i <= deg; ++i)
    max_ratio_lo = std::max(max_ratio_lo, std::abs(c[i] / c[0]));
  const double z_hi = 1.0 + max_ratio_hi;           // Cauchy bound
  const double z_lo = 1.0 / (1.0 + max_ratio_lo);   // reciprocal bound

  const int n_pts = std::max<int>(128, 32 * static_cast<int>(deg));
  const double ratio = std::pow(z_hi / (z_lo * 0.5), 1.0 / n_pts);

  double prev_z = z_lo * 0.5;
  double prev_f = poly_eval(c, prev_z);
  for (int i = 1; i <= n_pts; ++i) {
    const double z = (i == n_pts) ? z_hi : prev_z * ratio;
    const double f = poly_eval(c, z);
    if (f == 0.0) {
      roots.push_back(z);
    } else if (prev_f != 0.0 && (f > 0.0) != (prev_f > 0.0)) {
      roots.push_back(refine(c, prev_z, z, prev_f, bisect_tol));
    }
    prev_z = z;
    prev_f = f;
  }

  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](double a, double b) { return b - a < 1e-12 * (1.0 + b); }),
              roots.end());
  return roots;
}

}  // namespace rydberg
