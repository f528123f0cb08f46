#include "rydberg/entropy_opt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rydberg/complexity.hpp"
#include "rydberg/genfunc.hpp"

namespace rydberg {

double shannon_entropy(std::span<const double> p) {
  double sum = 0.0;
  for (double x : p) {
    if (x < 0.0) throw std::invalid_argument("probabilities must be non-negative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("probabilities must sum to 1");
  double h = 0.0;
  for (double x : p)
    if (x != 0.0) h -= x * std::log(x);
  return h;
}

mpz_class multinomial(std::int64_t n, std::span<const std::int64_t> profile) {
  std::int64_t total = 0;
  for (std::int64_t m : profile) {
    if (m < 0) throw std::invalid_argument("profile entries must be non-negative");
    total += m;
  }
  if (total != n) throw std::invalid_argument("profile must sum to N");
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_class mf;
  for (std::int64_t m : profile) {
    mpz_fac_ui(mf.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), mf.get_mpz_t());
  }
  return result;
}

namespace {

// enumerate all profiles; returns false if the visitor aborts
template <class Visitor>
bool enumerate_profiles(std::int64_t n, std::int64_t s, int b, std::vector<std::int64_t>& m,
                        int a, std::int64_t rem_n, std::int64_t rem_s, const Visitor& visit) {
  if (a == 1) {
    // M_1 = remaining weighted sum; M_0 = whatever is left of N
    if (rem_s <= rem_n) {
      m[1] = rem_s;
      m[0] = rem_n - rem_s;
      if (!visit(m)) return false;
    }
    return true;
  }
  const std::int64_t hi = std::min(rem_n, rem_s / a);
  for (std::int64_t v = 0; v <= hi; ++v) {
    m[a] = v;
    if (!enumerate_profiles(n, s, b, m, a - 1, rem_n - v, rem_s - v * a, visit)) return false;
  }
  return true;
}

template <class Visitor>
bool for_each_feasible(std::int64_t n, std::int64_t l, int b, const Visitor& visit) {
  const std::int64_t s = l - static_cast<std::int64_t>(b + 1) * n;
  if (n < 0 || s < 0 || s > static_cast<std::int64_t>(b) * n) return true;
  std::vector<std::int64_t> m(b + 1, 0);
  if (b == 0) return true;  // unreachable: ModelParams enforces b >= 1
  return enumerate_profiles(n, s, b, m, b, n, s, visit);
}

double profile_objective(std::span<const std::int64_t> m, std::int64_t n, std::int64_t l) {
  double h = 0.0;
  for (std::int64_t v : m) {
    if (v == 0) continue;
    const double p = static_cast<double>(v) / static_cast<double>(n);
    h -= p * std::log(p);
  }
  return static_cast<double>(n) / static_cast<double>(l) * h;
}

constexpr std::int64_t kExhaustiveLimit = 1000000;

}  // namespace

FeasibleSet feasible_set(std::int64_t n, std::int64_t l, const ModelParams& params) {
  FeasibleSet set;
  set.n = n;
  set.l = l;
  set.b = params.b;
  for_each_feasible(n, l, params.b, [&set](const std::vector<std::int64_t>& m) {
    if (static_cast<std::int64_t>(set.points.size()) > 4 * kExhaustiveLimit)
      throw std::length_error("feasible set too large to materialize");
    set.points.push_back(m);
    return true;
  });
  return set;
}

DiscreteEstimate discrete_complexity_estimate(std::int64_t n, std::int64_t l,
                                              const ModelParams& params) {
  DiscreteEstimate est;
  if (n <= 0 || l <= 0) return est;

  // exhaustive pass, abandoned if the set turns out to be large
  std::int64_t seen = 0;
  double best = -1.0;
  std::vector<std::int64_t> best_m;
  const bool completed =
      for_each_feasible(n, l, params.b, [&](const std::vector<std::int64_t>& m) {
        if (++seen > kExhaustiveLimit) return false;
        const double v = profile_objective(m, n, l);
        if (v > best) {
          best = v;
          best_m = m;
        }
        return true;
      });
  if (completed) {
    if (seen == 0) return est;  // empty feasible set: no configurations at this (N, L)
    est.feasible = true;
    est.value = best;
    est.argmax = std::move(best_m);
    return est;
  }

  // large set: round the continuous optimizer onto the constraint lattice
  // and hill-climb with moves that preserve both constraints
  const int b = params.b;
  const std::int64_t s = l - static_cast<std::int64_t>(b + 1) * n;
  const double rho = static_cast<double>(n) / static_cast<double>(l);
  std::vector<std::int64_t> m(b + 1, 0);
  const LagrangeSolution sol = continuous_optimizer(params, rho);
  for (int a = 0; a <= b; ++a)
    m[a] = static_cast<std::int64_t>(std::llround(sol.p_star[a] * static_cast<double>(n)));

  // repair sum M_a = N first (adjust M_0), then sum a M_a = S by unit shifts
  std::int64_t dn = n;
  for (std::int64_t v : m) dn -= v;
  m[0] += dn;
  if (m[0] < 0) {
    // push the deficit into the largest entry
    const auto it = std::max_element(m.begin() + 1, m.end());
    *it += m[0];
    m[0] = 0;
    if (*it < 0) throw std::logic_error("profile repair failed");
  }
  std::int64_t ds = -s;
  for (int a = 0; a <= b; ++a) ds += static_cast<std::int64_t>(a) * m[a];
  while (ds != 0) {
    if (ds > 0) {  // lower the weighted sum: move a unit from size a to a-1
      int a = b;
      while (a >= 1 && m[a] == 0) --a;
      if (a < 1) throw std::logic_error("profile repair failed");
      const std::int64_t step = std::min<std::int64_t>(ds, m[a]);
      m[a] -= step;
      m[a - 1] += step;
      ds -= step;
    } else {
      int a = 0;
      while (a < b && m[a] == 0) ++a;
      if (a >= b) throw std::logic_error("profile repair failed");
      const std::int64_t step = std::min<std::int64_t>(-ds, m[a]);
      m[a] -= step;
      m[a + 1] += step;
      ds += step;
    }
  }

  double cur = profile_objective(m, n, l);
  for (long iter = 0; iter < 100000; ++iter) {
    double best_gain = 0.0;
    int best_i = -1, best_j = -1;
    // kernel move: M_{i-1}+1, M_i-1, M_j-1, M_{j+1}+1 keeps both constraints
    for (int i = 1; i <= b; ++i) {
      for (int j = 0; j < b; ++j) {
        std::vector<std::int64_t> trial = m;
        trial[i] -= 1;
        trial[i - 1] += 1;
        trial[j] -= 1;
        trial[j + 1] += 1;
        bool ok = true;
        for (std::int64_t v : trial)
          if (v < 0) ok = false;
        if (!ok) continue;
        const double v = profile_objective(trial, n, l);
        if (v > cur + best_gain) {
          best_gain = v - cur;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_i < 0) break;
    m[best_i] -= 1;
    m[best_i - 1] += 1;
    m[best_j] -= 1;
    m[best_j + 1] += 1;
    cur = profile_objective(m, n, l);
  }

  est.feasible = true;
  est.value = cur;
  est.argmax = std::move(m);
  return est;
}

double exact_log_density(std::int64_t n, std::int64_t l, const ModelParams& params) {
  if (l <= 0) throw std::domain_error("length must be positive");
  const mpz_class count = jammed_count(params, n, l);
  if (count == 0) throw std::domain_error("no jammed configurations at this (N, L)");
  return log_mpz(count) / static_cast<double>(l);
}

double LagrangeSolution::complexity_from_multipliers() const {
  const int b = static_cast<int>(p_star.size()) - 1;
  const double coeff = 1.0 / rho - (b + 1);
  if (coeff == 0.0 || degenerate) return rho + lambda;
  return rho + lambda + mu * coeff;
}

LagrangeSolution continuous_optimizer(const ModelParams& params, double rho) {
  const int b = params.b;
  const double lo = 1.0 / (2 * b + 1);
  const double hi = 1.0 / (b + 1);
  if (!(rho > lo) || rho > hi * (1.0 + 1e-12))
    throw std::domain_error("density outside the support of the entropy maximization");

  LagrangeSolution sol;
  sol.rho = rho;
  sol.p_star.assign(b + 1, 0.0);

  const ComplexityPoint pt = complexity(params, rho);
  if (pt.z == 0.0) {  // right edge: all mass on the zero gap
    sol.degenerate = true;
    sol.z = 0.0;
    sol.mu = std::numeric_limits<double>::infinity();
    sol.lambda = -rho;
    sol.p_star[0] = 1.0;
    return sol;
  }

  const double z = pt.z;
  double log_geo;
  if (z <= 1.0) {
    double geo = 0.0;
    for (int i = b; i >= 0; --i) geo = geo * z + 1.0;
    log_geo = std::log(geo);
  } else {
    double geo = 0.0;
    const double w = 1.0 / z;
    for (int i = b; i >= 0; --i) geo = geo * w + 1.0;
    log_geo = b * std::log(z) + std::log(geo);
  }

  sol.z = z;
  sol.mu = -rho * std::log(z);
  sol.lambda = -rho * (1.0 - log_geo);
  for (int i = 0; i <= b; ++i)
    sol.p_star[i] = std::exp(i * std::log(z) - log_geo);

  double sum = 0.0, weighted = 0.0;
  for (int i = 0; i <= b; ++i) {
    sum += sol.p_star[i];
    weighted += i * sol.p_star[i];
  }
  if (std::abs(sum - 1.0) > 1e-10 ||
      std::abs(weighted - (1.0 / rho - (b + 1))) > 1e-10)
    throw std::logic_error("Lagrange solution violates the constraints");
  return sol;
}

}  // namespace rydberg
