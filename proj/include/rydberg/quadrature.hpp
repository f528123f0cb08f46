#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace rydberg {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

struct QuadratureError : std::runtime_error {
  QuadratureResult partial;

  QuadratureError(const std::string& what, QuadratureResult p)
      : std::runtime_error(what), partial(p) {}
};

namespace detail {

// 7-point Gauss / 15-point Kronrod nodes and weights on [-1, 1].
inline constexpr double kGK15Nodes[8] = {
    0.000000000000000000000000000000000, 0.207784955007898467600689403773245,
    0.405845151377397166906606412076961, 0.586087235467691130294144838258730,
    0.741531185599394439863864773280788, 0.864864423359769072789712788640926,
    0.949107912342758524526189684047851, 0.991455371120812639206854697526329};
inline constexpr double kKronrodW[8] = {
    0.209482141084727828012999174891714, 0.204432940075298892414161999234649,
    0.190350578064785409913256402421014, 0.169004726639267902826583426598550,
    0.140653259715525918745189590510238, 0.104790010322250183839876322541518,
    0.063092092629978553290700663189204, 0.022935322010529224963732008058970};
inline constexpr double kGaussW[4] = {
    0.417959183673469387755102040816327, 0.381830050505118944950369775488975,
    0.279705391489276667901467771423780, 0.129484966168869693270611432679082};

template <class F>
void gk15(const F& f, double a, double b, double& k15, double& err) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double f0 = f(mid);
  double kron = kKronrodW[0] * f0;
  double gauss = kGaussW[0] * f0;
  double fv[8];
  fv[0] = f0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kGK15Nodes[i];
    const double s = f(mid + dx) + f(mid - dx);
    fv[i] = s;
    kron += kKronrodW[i] * s;
    if (i % 2 == 0) gauss += kGaussW[i / 2] * s;
  }
  k15 = kron * half;
  const double g7 = gauss * half;

  // rescaled error estimate in the QUADPACK style
  double resasc = kKronrodW[0] * std::abs(f0 - kron * 0.5);
  for (int i = 1; i < 8; ++i) resasc += kKronrodW[i] * std::abs(fv[i] - kron);
  resasc *= half;
  double e = std::abs(k15 - g7);
  if (resasc > 0.0 && e > 0.0)
    e = resasc * std::min(1.0, std::pow(200.0 * e / resasc, 1.5));
  err = e;
}

}  // namespace detail

/// Adaptive bisection with a 7/15 Gauss-Kronrod rule, absolute tolerance.
/// Throws QuadratureError (carrying the partial result) if the interval
/// budget is exhausted before the summed error estimate drops below tol.
template <class F>
QuadratureResult integrate_adaptive(const F& f, double a, double b, double abs_tol,
                                    int max_intervals = 100000) {
  struct Interval {
    double a, b, value, err;
  };
  QuadratureResult res;
  if (a == b) return res;

  std::vector<Interval> heap;
  double v0, e0;
  detail::gk15(f, a, b, v0, e0);
  res.evaluations = 15;
  heap.push_back({a, b, v0, e0});

  double total_value = v0;
  double total_err = e0;
  const auto worse = [](const Interval& x, const Interval& y) { return x.err < y.err; };
  std::make_heap(heap.begin(), heap.end(), worse);

  while (total_err > abs_tol) {
    if (static_cast<int>(heap.size()) >= max_intervals) {
      res.value = total_value;
      res.abs_error_estimate = total_err;
      throw QuadratureError("quadrature interval budget exhausted (error " +
                                std::to_string(total_err) + " > tol " + std::to_string(abs_tol) +
                                ")",
                            res);
    }
    std::pop_heap(heap.begin(), heap.end(), worse);
    const Interval cur = heap.back();
    heap.pop_back();

    const double mid = 0.5 * (cur.a + cur.b);
    double vl, el, vr, er;
    detail::gk15(f, cur.a, mid, vl, el);
    detail::gk15(f, mid, cur.b, vr, er);
    res.evaluations += 30;

    total_value += vl + vr - cur.value;
    total_err += el + er - cur.err;

    heap.push_back({cur.a, mid, vl, el});
    std::push_heap(heap.begin(), heap.end(), worse);
    heap.push_back({mid, cur.b, vr, er});
    std::push_heap(heap.begin(), heap.end(), worse);

    // interval width has hit rounding resolution: accept what we have
    if (mid <= cur.a || mid >= cur.b) break;
  }

  // compensated final sum over the partition (the incremental total can drift)
  double sum = 0.0, comp = 0.0, err_sum = 0.0;
  for (const Interval& iv : heap) {
    const double y = iv.value - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    err_sum += iv.err;
  }
  res.value = sum;
  res.abs_error_estimate = err_sum;
  return res;
}

}  // namespace rydberg
