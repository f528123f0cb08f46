#include "rydberg/rsa.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <random>
#include <stdexcept>

#include "rydberg/complexity.hpp"

namespace rydberg {

std::uint64_t child_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  // splitmix64 finalizer applied to master + golden-ratio stride per trial
  std::uint64_t x = master_seed + (trial_index + 1) * 0x9E3779B97F4A7C15ull;
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

namespace {

// unbiased uniform draw from [0, n) (fixed algorithm, not the stdlib
// distribution, so streams are identical across standard libraries)
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t min = (-n) % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= min) return r % n;
  }
}

// one trial; returns the excited count and fills `excited` when requested
std::int64_t run_trial(std::int64_t length, int b, std::uint64_t trial_seed,
                       std::vector<std::int64_t>* excited_sites) {
  std::mt19937_64 rng(trial_seed);
  std::vector<std::int64_t> excitable(length);
  std::vector<std::int64_t> pos(length);
  for (std::int64_t i = 0; i < length; ++i) {
    excitable[i] = i;
    pos[i] = i;
  }
  std::int64_t excited = 0;
  while (!excitable.empty()) {
    const std::uint64_t r = uniform_below(rng, excitable.size());
    const std::int64_t s = excitable[r];
    ++excited;
    if (excited_sites) excited_sites->push_back(s);
    const std::int64_t lo = std::max<std::int64_t>(0, s - b);
    const std::int64_t hi = std::min<std::int64_t>(length - 1, s + b);
    for (std::int64_t u = lo; u <= hi; ++u) {
      const std::int64_t p = pos[u];
      if (p < 0) continue;
      const std::int64_t last = excitable.back();
      excitable[p] = last;
      pos[last] = p;
      excitable.pop_back();
      pos[u] = -1;
    }
  }
  return excited;
}

}  // namespace

SimSummary simulate_rsa(const SimConfig& config) {
  if (config.length < 1) throw std::invalid_argument("lattice length must be >= 1");
  if (config.trials < 1) throw std::invalid_argument("trial count must be >= 1");
  ModelParams params(config.b);

  SimSummary out;
  out.trials = config.trials;
  out.seed = config.seed;

  double sum = 0.0, sumsq = 0.0;
  for (int t = 0; t < config.trials; ++t) {
    const std::int64_t n = run_trial(config.length, params.b, child_seed(config.seed, t), nullptr);
    const double d = static_cast<double>(n) / static_cast<double>(config.length);
    sum += d;
    sumsq += d * d;
    if (config.keep_per_trial) out.per_trial.push_back(d);
  }
  out.mean_density = sum / config.trials;
  if (config.trials > 1) {
    const double var =
        std::max(0.0, (sumsq - sum * sum / config.trials) / (config.trials - 1));
    out.std_error = std::sqrt(var / config.trials);
  }
  return out;
}

Configuration simulate_rsa_trial(std::int64_t length, const ModelParams& params,
                                 std::uint64_t trial_seed) {
  std::vector<std::int64_t> sites;
  run_trial(length, params.b, trial_seed, &sites);
  Configuration c;
  c.sites.resize(length, Site::neutral);
  for (std::int64_t s : sites) c.sites[s] = Site::excited;
  return c;
}

QuadratureResult jamming_limit_quadrature(const ModelParams& params, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const int b = params.b;
  const auto integrand = [b](double y) {
    double sum = 0.0, yj = 1.0;
    for (int j = 1; j <= b; ++j) {
      yj *= y;
      sum += (1.0 - yj) / j;
    }
    return std::exp(-2.0 * sum);
  };
  return integrate_adaptive(integrand, 0.0, 1.0, tol);
}

QuadratureResult kmer_jamming_limit(int k, double tol) {
  if (k < 2) throw std::invalid_argument("k-mer size must be >= 2");
  // per-integral tolerance tight enough that the 1e-9 agreement assertion
  // below cannot trip on quadrature error alone
  const double qtol = std::min(tol, 5e-10) / (2 * k);
  QuadratureResult direct = jamming_limit_quadrature(ModelParams(k - 1), qtol);
  direct.value *= k;
  direct.abs_error_estimate *= k;

  // exponential form; integrand <= e^{-u}, so [0, 45] loses < 1e-19
  const auto integrand_u = [k](double u) {
    double sum = 0.0;
    for (int j = 1; j < k; ++j) sum += -std::expm1(-static_cast<double>(j) * u) / j;
    return std::exp(-u - 2.0 * sum);
  };
  const QuadratureResult expo = integrate_adaptive(integrand_u, 0.0, 45.0, qtol);
  direct.evaluations += expo.evaluations;
  if (std::abs(expo.value * k - direct.value) > 1e-9)
    throw std::logic_error("k-mer jamming limit: the two integral forms disagree");
  return direct;
}

namespace {

// Cumulative inner integral with anchor rows every `panel` units: exact
// panel completion, no interpolation. eval(y) beyond y_cut uses the 1/x
// continuation of the integrand.
class InnerIntegral {
 public:
  template <class F>
  InnerIntegral(const F& f, double y_cut, double panel, double tol)
      : f_(f), y_cut_(y_cut), panel_(panel) {
    const int n = static_cast<int>(std::ceil(y_cut / panel));
    anchors_.resize(n + 1, 0.0);
    const double per_panel_tol = std::max(tol / n, 5e-15);
    for (int i = 1; i <= n; ++i) {
      const double a = (i - 1) * panel_;
      const double b = std::min(i * panel_, y_cut_);
      anchors_[i] = anchors_[i - 1] + integrate_adaptive(f_, a, b, per_panel_tol).value;
    }
  }

  double operator()(double y) const {
    if (y >= y_cut_) return anchors_.back() + std::log(y / y_cut_);
    const int i = std::min<int>(static_cast<int>(y / panel_),
                                static_cast<int>(anchors_.size()) - 2);
    const double a = i * panel_;
    return anchors_[i] + integrate_adaptive(f_, a, y, 5e-15).value;
  }

 private:
  std::function<double(double)> f_;
  double y_cut_;
  double panel_;
  std::vector<double> anchors_;
};

}  // namespace

QuadratureResult renyi_constant(double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  const auto inner_integrand = [](double x) {
    return x == 0.0 ? 1.0 : -std::expm1(-x) / x;
  };
  const double y_cut = 45.0;  // (1-e^{-x})/x == 1/x below double epsilon beyond here
  const InnerIntegral inner(inner_integrand, y_cut, 0.5, 1e-13);

  const double outer_cut = 50.0;
  const auto outer = [&inner](double y) { return std::exp(-2.0 * inner(y)); };
  QuadratureResult head = integrate_adaptive(outer, 0.0, outer_cut, tol / 2);

  // tail via u = 1/y: integrand extends flatly to u = 0
  const auto tail_integrand = [&inner](double u) {
    if (u <= 0.0) u = 1e-300;
    return std::exp(-2.0 * inner(1.0 / u) - 2.0 * std::log(u));
  };
  const QuadratureResult tail = integrate_adaptive(tail_integrand, 0.0, 1.0 / outer_cut, tol / 2);

  head.value += tail.value;
  head.abs_error_estimate += tail.abs_error_estimate;
  head.evaluations += tail.evaluations;
  return head;
}

std::vector<ScaledJammingRow> scaled_limit_table(int b_max, double tol) {
  if (b_max < 1) throw std::invalid_argument("b_max must be >= 1");
  std::vector<ScaledJammingRow> out;
  out.reserve(b_max);
  for (int b = 1; b <= b_max; ++b) {
    const double bd = b;
    // 1 - (1 - x/b)^b via expm1/log1p keeps full precision down to x = 0
    const auto inner_integrand = [bd](double x) {
      if (x == 0.0) return 1.0;
      if (x >= bd) return 1.0 / x;
      return -std::expm1(bd * std::log1p(-x / bd)) / x;
    };
    const InnerIntegral inner(inner_integrand, bd, 0.5, std::min(tol, 2.5e-9) / 10);
    const auto outer = [&inner](double y) { return std::exp(-2.0 * inner(y)); };
    const double scaled = integrate_adaptive(outer, 0.0, bd, std::min(tol, 2.5e-9)).value;

    // the cross-check multiplies the direct value by b, so its quadrature
    // tolerance has to shrink with b
    const double direct =
        b * jamming_limit_quadrature(ModelParams(b), std::min(tol, 2.5e-9 / b)).value;
    if (std::abs(scaled - direct) > 1e-8)
      throw std::logic_error("scaled jamming limit: substitution and direct forms disagree at b=" +
                             std::to_string(b));
    out.push_back({b, scaled});
  }
  return out;
}

void write_comparison_csv(std::ostream& os, int b_max, double tol) {
  os << "b,rho_inf,rho_star,b_rho_inf,b_rho_star\n";
  char buf[512];
  for (int b = 1; b <= b_max; ++b) {
    const ModelParams params(b);
    const double inf = jamming_limit_quadrature(params, tol).value;
    const double star = rho_star(params).rho_star;
    std::snprintf(buf, sizeof buf, "%d,%.15g,%.15g,%.15g,%.15g\n", b, inf, star, b * inf,
                  b * star);
    os << buf;
  }
}

}  // namespace rydberg
