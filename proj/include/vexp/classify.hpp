#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "vexp/grid.hpp"
#include "vexp/orlicz.hpp"
#include "vexp/quadrature.hpp"
#include "vexp/verdict.hpp"

namespace vexp {

// ---------------------------------------------------------------------------
// K_{r,s} membership
// ---------------------------------------------------------------------------

enum class KrsCondition {
  nondecreasing = 1,       // (i)
  r_root_convex = 2,       // (ii)  t -> phi(t^{1/r}) midpoint-convex
  s_root_concave = 3,      // (iii) t -> phi(t^{1/s}) midpoint-concave
  difference_bounds = 4,   // (iv)  Psi_s-diff <= dphi <= Psi_r-diff
  scaling_bound = 5,       // (v)   phi(bt) <= b^s phi(t)
};

struct KrsViolation {
  KrsCondition condition;
  double u = 0.0;  // first point (or t for single-point checks)
  double t = 0.0;  // second point (or scale b for condition (v))
  double margin = 0.0;
};

struct KrsReport {
  bool passed = true;
  std::vector<KrsViolation> violations;
};

namespace detail {

inline double finite_eval(const OrliczFn& phi, double t) {
  const ExtReal v = phi.eval(t);
  if (v.is_infinite())
    throw std::invalid_argument("krs_membership: phi must be finite on [0, 1]");
  return v.value();
}

}  // namespace detail

/// Grid check of the defining conditions of K_{r,s} for a candidate phi on
/// [0, 1]. Violations are data, not errors. With s = inf, the s-side checks
/// are vacuous: the scaling bound b^inf is infinite and the s-power
/// differences vanish under the 1^inf = 0 convention.
inline KrsReport krs_membership(const OrliczFn& phi, Exponent r, Exponent s,
                                const Grid& grid) {
  if (!(r <= s)) throw std::invalid_argument("krs_membership: need r <= s");
  if (grid.back() > 1.0 + 1e-15)
    throw std::invalid_argument("krs_membership: grid must lie in [0, 1]");
  KrsReport rep;
  const double slack = 1e-12;
  auto flag = [&](KrsCondition c, double u, double t, double margin) {
    if (margin > slack) {
      rep.passed = false;
      rep.violations.push_back(KrsViolation{c, u, t, margin});
    }
  };

  // (i) nondecreasing along the grid.
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double a = detail::finite_eval(phi, grid[i - 1]);
    const double b = detail::finite_eval(phi, grid[i]);
    flag(KrsCondition::nondecreasing, grid[i - 1], grid[i], a - b);
  }

  // Decimated pair set keeps the O(n^2) checks cheap at default resolution.
  std::vector<double> sub;
  const std::size_t stride = std::max<std::size_t>(1, grid.size() / 64);
  for (std::size_t i = 0; i < grid.size(); i += stride) sub.push_back(grid[i]);
  if (sub.back() != grid.back()) sub.push_back(grid.back());

  // (ii) midpoint convexity of pi_r(phi) and (iii) midpoint concavity of
  // pi_s(phi), evaluated off-grid at midpoints.
  if (r.is_finite()) {
    const double rv = r.finite_value();
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = i + 1; j < sub.size(); ++j) {
        const double x = sub[i], y = sub[j];
        const double mid = 0.5 * (x + y);
        const double lhs = detail::finite_eval(phi, std::pow(mid, 1.0 / rv));
        const double rhs =
            0.5 * (detail::finite_eval(phi, std::pow(x, 1.0 / rv)) +
                   detail::finite_eval(phi, std::pow(y, 1.0 / rv)));
        flag(KrsCondition::r_root_convex, x, y, lhs - rhs);
      }
  }
  if (s.is_finite()) {
    const double sv = s.finite_value();
    for (std::size_t i = 0; i < sub.size(); ++i)
      for (std::size_t j = i + 1; j < sub.size(); ++j) {
        const double x = sub[i], y = sub[j];
        const double mid = 0.5 * (x + y);
        const double lhs =
            0.5 * (detail::finite_eval(phi, std::pow(x, 1.0 / sv)) +
                   detail::finite_eval(phi, std::pow(y, 1.0 / sv)));
        const double rhs = detail::finite_eval(phi, std::pow(mid, 1.0 / sv));
        flag(KrsCondition::s_root_concave, x, y, lhs - rhs);
      }
  }

  // (iv) two-sided difference bounds over pairs u < t, including (0, t).
  std::vector<double> pts(sub);
  pts.insert(pts.begin(), 0.0);
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double u = pts[i], t = pts[j];
      const double dphi =
          detail::finite_eval(phi, t) - detail::finite_eval(phi, u);
      flag(KrsCondition::difference_bounds, u, t, psi_diff(s, u, t) - dphi);
      flag(KrsCondition::difference_bounds, u, t, dphi - psi_diff(r, u, t));
    }

  // (v) scaling bound phi(bt) <= b^s phi(t), sampled b in (1, 2].
  if (s.is_finite()) {
    const double sv = s.finite_value();
    for (double b : {1.25, 1.5, 1.75, 2.0}) {
      const double bs = std::pow(b, sv);
      for (double t : sub) {
        if (t > 1.0 / b) continue;
        const double lhs = detail::finite_eval(phi, b * t);
        const double rhs = bs * detail::finite_eval(phi, t);
        flag(KrsCondition::scaling_bound, t, b, lhs - rhs);
      }
    }
  }

  return rep;
}

// ---------------------------------------------------------------------------
// Near-zero equivalence search
// ---------------------------------------------------------------------------

struct EquivalenceSearch {
  std::vector<double> b_grid{1.0, 2.0};
  double C_max = 3.0;
  std::vector<double> c_grid{1.0, 0.5, 0.25, 0.1};
};

struct EquivalenceVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  double b = 0.0, C = 0.0, c = 0.0;  // witness, when found
  std::string note;
};

/// Searches for (b, C, c) with G(t) <= C F(bt) on the grid restricted to
/// (0, c]. Pairs with b*c > 1 are skipped so the comparison never leaves
/// [0, 1], where mixtures are defined. A violation is declared when, for
/// every searched b, the ratio G(t)/F(bt) increases strictly across the
/// decades t = 1e-2, 1e-4, 1e-6.
inline EquivalenceVerdict equivalence_near_zero(const OrliczFn& F,
                                                const OrliczFn& G,
                                                const EquivalenceSearch& search,
                                                const Grid& t_grid) {
  EquivalenceVerdict out;
  std::vector<double> cs = search.c_grid;
  std::sort(cs.rbegin(), cs.rend());
  std::vector<double> bs = search.b_grid;
  std::sort(bs.begin(), bs.end());

  auto ratio_at = [&](double b, double t) -> double {
    const double g = G.eval(t).as_double();
    const double f = F.eval(b * t).as_double();
    if (f <= 0.0) return std::numeric_limits<double>::infinity();
    return g / f;
  };

  for (double c : cs) {
    for (double b : bs) {
      if (b * c > 1.0 + 1e-15) continue;
      double C_req = 0.0;
      for (double t : t_grid.pts) {
        if (t <= 0.0 || t > c) continue;
        C_req = std::max(C_req, ratio_at(b, t));
      }
      if (C_req <= search.C_max) {
        out.kind = VerdictKind::WitnessFound;
        out.b = b;
        out.C = C_req;
        out.c = c;
        return out;
      }
    }
  }

  // Violation test: monotone ratio growth toward 0 for every b.
  bool all_grow = true;
  for (double b : bs) {
    double prev = -1.0;
    bool grows = true;
    for (double anchor : {1e-2, 1e-4, 1e-6}) {
      const double t = t_grid[t_grid.nearest_index(anchor)];
      if (b * t > 1.0) {
        grows = false;
        break;
      }
      const double rho = ratio_at(b, t);
      if (prev >= 0.0 && !(rho > prev)) grows = false;
      prev = rho;
    }
    if (!grows) {
      all_grow = false;
      break;
    }
  }
  if (all_grow) {
    out.kind = VerdictKind::ViolationFound;
    out.note = "ratio G/F(b t) grows across decades for every searched b";
  } else {
    out.kind = VerdictKind::Inconclusive;
    out.note = "no witness within the searched box";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Restriction sandwich
// ---------------------------------------------------------------------------

struct SandwichResult {
  double lambda = 0.0;
  ExponentMeasure nu;
  double max_violation = 0.0;  // <= 0 means the sandwich holds on the grid
};

/// With r = min supp(mu) and lambda = mu([r, s)) > 0, the restriction
/// nu = mu|_{[r,s)} / lambda satisfies psi_mu <= psi_nu <= psi_mu / lambda on
/// [0, 1]. Returns the largest signed excess of either inequality over the
/// grid.
inline SandwichResult minsupp_sandwich(const ExponentMeasure& mu, Exponent s,
                                       const Grid& grid) {
  const Exponent r = mu.min_support();
  if (!(s > r))
    throw std::invalid_argument("minsupp_sandwich: need s > min supp(mu)");
  const double lambda = mu.mass_below(r, s);
  if (!(lambda > 0.0))
    throw std::invalid_argument("minsupp_sandwich: mu([r, s)) = 0");
  std::vector<ExponentAtom> restricted;
  for (const auto& a : mu.atoms())
    if (a.p >= r && a.p < s) restricted.push_back({a.p, a.w / lambda});
  // Re-normalize exactly to absorb rounding in the division.
  double tot = 0.0;
  for (const auto& a : restricted) tot += a.w;
  for (auto& a : restricted) a.w /= tot;

  SandwichResult out{lambda, ExponentMeasure(std::move(restricted)), 0.0};
  for (double t : grid.pts) {
    if (t > 1.0) break;
    const double pm = psi_mixture(mu, t);
    const double pn = psi_mixture(out.nu, t);
    out.max_violation = std::max(out.max_violation, pm - pn);
    out.max_violation = std::max(out.max_violation, lambda * pn - pm);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Log-perturbed power identity
// ---------------------------------------------------------------------------

struct LogPerturbedPoint {
  double t = 0.0;
  double c_direct = 0.0;  // scaled v-integral
  double c_ratio = 0.0;   // p-integral divided by the log-power form
};

struct LogPerturbedIdentity {
  std::vector<LogPerturbedPoint> points;
  double min_c = 0.0, max_c = 0.0;
};

namespace detail {

enum class QuadRule { gauss_kronrod, simpson };

// Integrates g(v) v^{a-1} over [0, hi]; for a < 1 the substitution v = w^{1/a}
// removes the endpoint singularity (v^{a-1} dv = dw / a).
template <typename G>
double power_weighted_integral(const G& g, double a, double hi,
                               double quad_tol, QuadRule rule) {
  auto run = [&](auto&& f, double lo2, double hi2) {
    return rule == QuadRule::gauss_kronrod
               ? integrate_or_throw(f, lo2, hi2, quad_tol)
               : integrate_simpson_or_throw(f, lo2, hi2, quad_tol);
  };
  if (a >= 1.0) {
    return run([&](double v) { return std::pow(v, a - 1.0) * g(v); }, 0.0, hi);
  }
  const double whi = std::pow(hi, a);
  return run(
      [&](double w) {
        const double v = std::pow(w, 1.0 / a);
        return g(v) / a;
      },
      0.0, whi);
}

}  // namespace detail

/// Verifies, point by point, the identity expressing the mixture of power
/// functions with density a (p-r)^{a-1} / (s-r)^a on [r, s] as
/// C(t) t^r (-log t)^{-a}, computing C(t) by two independent quadratures:
///
///   direct:  C(t) = a/(s-r)^a * int_0^{(r-s) log t} v^{a-1} e^{-v}
///                                 / (r - v/log t) dv
///   ratio:   C(t) = [int_r^s (t^p / p) a (p-r)^{a-1} / (s-r)^a dp]
///                   / [t^r (-log t)^{-a}]
///
/// C(t) stays in a bounded interval: its t -> 0 limit is
/// Gamma(a+1) / (r (s-r)^a). The t^r factor of the p-integral is carried
/// analytically so the integrand stays O(1) at small t. The two integrals
/// are affine substitutions of each other and Gauss-Kronrod is
/// affine-invariant, so the routes run on different rule families
/// (Gauss-Kronrod vs Simpson) to stay independent.
inline LogPerturbedIdentity log_perturbed_identity(double r, double a,
                                                   double s,
                                                   const std::vector<double>& t_grid,
                                                   double quad_tol = 1e-10) {
  if (!(r > 0.0) || !(s > r) || !(a > 0.0))
    throw std::invalid_argument("log_perturbed_identity: need 0 < r < s, a > 0");
  LogPerturbedIdentity out;
  const double scale = a / std::pow(s - r, a);
  for (double t : t_grid) {
    if (!(t > 0.0) || t > std::exp(-1.0) + 1e-15)
      throw std::invalid_argument(
          "log_perturbed_identity: t grid must lie in (0, 1/e]");
    const double L = -std::log(t);

    const double direct =
        scale * detail::power_weighted_integral(
                    [&](double v) { return std::exp(-v) / (r + v / L); }, a,
                    (s - r) * L, quad_tol, detail::QuadRule::gauss_kronrod);

    // p-integral with w = p - r and the t^r factor removed: the remaining
    // integrand is e^{-wL} w^{a-1} / (r + w).
    const double p_integral =
        scale * detail::power_weighted_integral(
                    [&](double w) { return std::exp(-w * L) / (r + w); }, a,
                    s - r, quad_tol, detail::QuadRule::simpson);
    const double ratio = p_integral * std::pow(L, a);

    out.points.push_back(LogPerturbedPoint{t, direct, ratio});
  }
  out.min_c = out.points.front().c_direct;
  out.max_c = out.points.front().c_direct;
  for (const auto& p : out.points) {
    out.min_c = std::min({out.min_c, p.c_direct, p.c_ratio});
    out.max_c = std::max({out.max_c, p.c_direct, p.c_ratio});
  }
  return out;
}

}  // namespace vexp
