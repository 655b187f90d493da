#pragma once

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace vexp {

struct QuadResult {
  double value = 0.0;
  double abs_err = 0.0;
  bool converged = false;
};

namespace detail {

// 15-point Kronrod rule with embedded 7-point Gauss rule (positive abscissae;
// the rule is symmetric).
inline constexpr double kKronrodX[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double kKronrodW[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
// Gauss weights aligned with the odd Kronrod abscissae (indices 1,3,5,7).
inline constexpr double kGaussW[4] = {0.129484966168870, 0.279705391489277,
                                      0.381830050505119, 0.417959183673469};

template <typename F>
inline void gk15(const F& f, double a, double b, double* kronrod,
                 double* err) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  double resk = 0.0, resg = 0.0;
  for (int i = 0; i < 8; ++i) {
    const double dx = h * kKronrodX[i];
    double fsum;
    if (i == 7) {
      fsum = f(c);
    } else {
      fsum = f(c - dx) + f(c + dx);
    }
    resk += kKronrodW[i] * fsum;
    if (i % 2 == 1) resg += kGaussW[i / 2] * fsum;
  }
  *kronrod = resk * h;
  const double diff = std::abs(resk - resg) * std::abs(h);
  // QUADPACK-style sharpened error estimate.
  *err = diff;
  if (diff > 0.0) {
    const double scaled = std::pow(200.0 * diff / std::abs(resk * h + 1e-300), 1.5);
    if (scaled < 1.0) *err = std::abs(resk * h) * scaled / 200.0 + 1e-300;
  }
  *err = std::max(*err, diff * 1e-6);
}

struct Interval {
  double a, b, value, err;
  bool operator<(const Interval& o) const { return err < o.err; }
};

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b] to absolute
/// tolerance abs_tol. Bisects the interval with the largest error estimate.
template <typename F>
QuadResult integrate_adaptive(const F& f, double a, double b,
                              double abs_tol = 1e-10,
                              std::size_t max_intervals = 4096) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<detail::Interval> heap;
  double v0, e0;
  detail::gk15(f, a, b, &v0, &e0);
  heap.push({a, b, v0, e0});
  double total = v0, total_err = e0;
  std::size_t n = 1;
  while (total_err > abs_tol && n < max_intervals) {
    detail::Interval top = heap.top();
    heap.pop();
    const double mid = 0.5 * (top.a + top.b);
    if (mid == top.a || mid == top.b) {
      // Interval width at machine limit; keep its estimate and stop splitting.
      heap.push(top);
      break;
    }
    double vl, el, vr, er;
    detail::gk15(f, top.a, mid, &vl, &el);
    detail::gk15(f, mid, top.b, &vr, &er);
    total += (vl + vr) - top.value;
    total_err += (el + er) - top.err;
    heap.push({top.a, mid, vl, el});
    heap.push({mid, top.b, vr, er});
    ++n;
  }
  out.value = total;
  out.abs_err = total_err;
  out.converged = total_err <= abs_tol;
  return out;
}

/// As integrate_adaptive, but throws on non-convergence, reporting the
/// achieved tolerance.
template <typename F>
double integrate_or_throw(const F& f, double a, double b,
                          double abs_tol = 1e-10) {
  const QuadResult r = integrate_adaptive(f, a, b, abs_tol);
  if (!r.converged)
    throw std::runtime_error(
        "quadrature did not converge: achieved abs error " +
        std::to_string(r.abs_err) + " > tol " + std::to_string(abs_tol));
  return r.value;
}

namespace detail {

template <typename F>
void simpson_rec(const F& f, double a, double b, double fa, double fm,
                 double fb, double whole, double tol, int depth,
                 double* total, double* err) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    *total += left + right + delta / 15.0;
    *err += std::abs(delta) / 15.0;
    return;
  }
  simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, total, err);
  simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, total, err);
}

}  // namespace detail

/// Adaptive Simpson integration with Richardson correction. A deliberately
/// different rule family from the Gauss-Kronrod path, so the two can serve
/// as mutually independent routes to the same integral.
template <typename F>
QuadResult integrate_adaptive_simpson(const F& f, double a, double b,
                                      double abs_tol = 1e-10,
                                      int max_depth = 48) {
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  detail::simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth,
                      &out.value, &out.abs_err);
  out.converged = out.abs_err <= abs_tol;
  return out;
}

template <typename F>
double integrate_simpson_or_throw(const F& f, double a, double b,
                                  double abs_tol = 1e-10) {
  const QuadResult r = integrate_adaptive_simpson(f, a, b, abs_tol);
  if (!r.converged)
    throw std::runtime_error(
        "simpson quadrature did not converge: achieved abs error " +
        std::to_string(r.abs_err) + " > tol " + std::to_string(abs_tol));
  return r.value;
}

}  // namespace vexp
