#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "vexp/grid.hpp"
#include "vexp/orlicz.hpp"

namespace vexp {

namespace detail {

// uv - F(u) as a double; -inf where F is infinite, so the maximization sees
// the divergence ray as a hard wall.
inline double young_gap(const OrliczFn& F, double u, double v) {
  const ExtReal fu = F.eval(u);
  if (fu.is_infinite()) return -std::numeric_limits<double>::infinity();
  return u * v - fu.value();
}

}  // namespace detail

/// F*(v) = sup_{u >= 0} (uv - F(u)) for convex F. The inner sup runs a
/// ternary search on the concave map u -> uv - F(u); when {F = inf} = (c, inf)
/// the search bracket is [0, c], otherwise the bracket grows by doubling until
/// the gap starts to fall. Returns the infinity marker when the sup diverges.
/// For sampled input the sup is taken over the sampled domain (no
/// extrapolation), plus the u = 0 anchor every Orlicz function provides.
inline ExtReal fenchel_at(const OrliczFn& F, double v) {
  if (!F.is_convex_known())
    throw std::invalid_argument(
        "fenchel_at: conjugation requires a convex Orlicz function");
  if (v < 0.0 || std::isnan(v))
    throw std::invalid_argument("fenchel_at: v must be >= 0");

  double lo = 0.0;
  double hi;
  double ray_start;
  const bool has_ray = F.infinity_ray(&ray_start);
  if (const auto* s = F.get_if<orlicz_form::Sampled>()) {
    // The sampled domain bounds the search; u below the grid contributes at
    // most u*v <= t_front*v, which the u = 0 clamp already dominates up to
    // that sliver.
    lo = s->t.front();
    hi = has_ray ? std::max(ray_start, lo) : s->t.back();
  } else if (has_ray) {
    hi = ray_start;
  } else {
    // Double until past the peak of the concave gap, or declare divergence.
    // Strict comparison: a flat gap (p = 1 at the kink) is a finite sup, not
    // a divergence.
    constexpr double kDivergenceCap = 1e30;
    hi = std::max(1.0, v);
    while (detail::young_gap(F, 2.0 * hi, v) > detail::young_gap(F, hi, v)) {
      hi *= 2.0;
      if (hi > kDivergenceCap) return ExtReal::infinity();
    }
    hi *= 2.0;
  }

  double a = lo, b = hi;
  for (int it = 0; it < 200 && (b - a) > 1e-18 * std::max(1.0, b); ++it) {
    const double m1 = a + (b - a) / 3.0;
    const double m2 = b - (b - a) / 3.0;
    if (detail::young_gap(F, m1, v) < detail::young_gap(F, m2, v))
      a = m1;
    else
      b = m2;
  }
  double best = detail::young_gap(F, 0.5 * (a + b), v);
  // Endpoints are legitimate maximizers (e.g. the ray edge, or u = 0).
  best = std::max(best, detail::young_gap(F, lo, v));
  best = std::max(best, detail::young_gap(F, hi, v));
  best = std::max(best, 0.0);  // sup >= 0v - F(0) = 0
  return ExtReal(best);
}

/// Tabulates F* over v_grid as a convex Sampled Orlicz function, with the
/// infinity marker where the sup diverges.
inline OrliczFn conjugate(const OrliczFn& F, const Grid& v_grid) {
  if (v_grid.size() < 2)
    throw std::invalid_argument("conjugate: grid too small");
  std::vector<double> t(v_grid.pts), y;
  y.reserve(t.size());
  for (double v : t) {
    const ExtReal fs = fenchel_at(F, v);
    y.push_back(fs.as_double());
  }
  if (!(y.back() > 0.0))
    throw std::invalid_argument(
        "conjugate: F* vanishes on the whole grid; extend the grid toward "
        "the divergence point of F*");
  return OrliczFn::sampled(std::move(t), std::move(y), /*convex=*/true);
}

struct OrliczBoundResult {
  double w = 0.0;          // min{v/C, F(c)/c}
  ExtReal fstar_w;         // F*(w)
  double budget = 0.0;     // A/C
  bool bound_ok = false;   // F*(w) <= A/C + tol
};

/// Checks the hypothesis uv <= C F(u) + A on a grid over [0, c], then
/// certifies F*(w) <= A/C at w = min{v/C, F(c)/c}.
inline OrliczBoundResult orlicz_bound(const OrliczFn& F, double c, double C,
                                      double A, double v,
                                      std::size_t hyp_grid = 256,
                                      double tol = 1e-9) {
  if (!(c > 0.0) || !(C > 0.0) || !(A > 0.0) || !(v > 0.0))
    throw std::invalid_argument("orlicz_bound: c, C, A, v must be > 0");
  for (std::size_t i = 0; i <= hyp_grid; ++i) {
    const double u = c * static_cast<double>(i) / static_cast<double>(hyp_grid);
    const ExtReal fu = F.eval(u);
    const double rhs = fu.is_infinite()
                           ? std::numeric_limits<double>::infinity()
                           : C * fu.value() + A;
    if (u * v > rhs + 1e-12)
      throw std::invalid_argument(
          "orlicz_bound: hypothesis uv <= C F(u) + A fails at u = " +
          std::to_string(u));
  }
  OrliczBoundResult out;
  const ExtReal fc = F.eval(c);
  const double slope = fc.is_infinite()
                           ? std::numeric_limits<double>::infinity()
                           : fc.value() / c;
  out.w = std::min(v / C, slope);
  out.fstar_w = fenchel_at(F, out.w);
  out.budget = A / C;
  out.bound_ok =
      out.fstar_w.is_finite() && out.fstar_w.value() <= out.budget + tol;
  return out;
}

}  // namespace vexp
