#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vexp/exponents.hpp"
#include "vexp/extended.hpp"
#include "vexp/grid.hpp"

namespace vexp {

// A probability measure on exponents: finitely many atoms with weights
// summing to 1 (within 1e-12).
class ExponentMeasure {
 public:
  explicit ExponentMeasure(std::vector<ExponentAtom> atoms)
      : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw std::invalid_argument("ExponentMeasure: no atoms");
    double s = 0.0;
    for (const auto& a : atoms_) {
      if (!(a.w > 0.0)) throw std::invalid_argument("ExponentMeasure: weights must be > 0");
      s += a.w;
    }
    if (std::abs(s - 1.0) > 1e-12)
      throw std::invalid_argument("ExponentMeasure: weights sum to " +
                                  std::to_string(s) + ", expected 1");
  }

  static ExponentMeasure dirac(Exponent p) {
    return ExponentMeasure({ExponentAtom{p, 1.0}});
  }

  const std::vector<ExponentAtom>& atoms() const { return atoms_; }

  Exponent min_support() const {
    Exponent m = atoms_.front().p;
    for (const auto& a : atoms_)
      if (a.p < m) m = a.p;
    return m;
  }

  Exponent max_support() const {
    Exponent m = atoms_.front().p;
    for (const auto& a : atoms_)
      if (a.p > m) m = a.p;
    return m;
  }

  /// Total mass on [lo, hi).
  double mass_below(Exponent lo, Exponent hi) const {
    double s = 0.0;
    for (const auto& a : atoms_)
      if (a.p >= lo && a.p < hi) s += a.w;
    return s;
  }

 private:
  std::vector<ExponentAtom> atoms_;
};

/// psi_mu(t) = sum_i w_i Psi_{p_i}(t) on [0, 1]; always finite there since
/// Psi_inf vanishes on [0, 1].
inline double psi_mixture(const ExponentMeasure& mu, double t) {
  if (t < 0.0 || t > 1.0)
    throw std::invalid_argument("psi_mixture: defined on [0, 1]");
  double s = 0.0;
  for (const auto& a : mu.atoms()) s += a.w * psi_pow(t, a.p).value();
  return s;
}

// ---------------------------------------------------------------------------
// Orlicz function forms
// ---------------------------------------------------------------------------

namespace orlicz_form {

struct PowerPhi {
  Exponent p;
};

struct PowerPsi {
  Exponent p;
};

// F_{r,a}: 0 at 0, t^r (-log t)^a on (0, 1/e], t^r beyond.
struct LogPerturbed {
  double r;
  double a;
};

struct Mixture {
  ExponentMeasure mu;
};

// Truncated lacunary power series F(t) = sum_{n<=J} b_n t^{r_n}; the weight
// not covered by the truncation is carried as an explicit tail bound.
struct Lacunary {
  std::vector<double> r;  // strictly decreasing, length J
  std::vector<double> b;  // positive, length J
  double r_limit;         // declared limit of the full sequence
  double tail_weight;     // 1 - sum(b)
};

struct Sampled {
  std::vector<double> t;  // ascending
  std::vector<double> y;  // nondecreasing; +inf marks the divergence ray
  bool convex;
};

}  // namespace orlicz_form

// An extended-value Orlicz function in closed or sampled form.
class OrliczFn {
 public:
  using Form = std::variant<orlicz_form::PowerPhi, orlicz_form::PowerPsi,
                            orlicz_form::LogPerturbed, orlicz_form::Mixture,
                            orlicz_form::Lacunary, orlicz_form::Sampled>;

  static OrliczFn power_phi(Exponent p) {
    return OrliczFn(orlicz_form::PowerPhi{p});
  }

  static OrliczFn power_psi(Exponent p) {
    return OrliczFn(orlicz_form::PowerPsi{p});
  }

  static OrliczFn log_perturbed(double r, double a) {
    if (!(r > 0.0)) throw std::invalid_argument("log_perturbed: r must be > 0");
    return OrliczFn(orlicz_form::LogPerturbed{r, a});
  }

  static OrliczFn mixture(ExponentMeasure mu) {
    return OrliczFn(orlicz_form::Mixture{std::move(mu)});
  }

  static OrliczFn lacunary(orlicz_form::Lacunary lac) {
    return OrliczFn(std::move(lac));
  }

  static OrliczFn sampled(std::vector<double> t, std::vector<double> y,
                          bool convex) {
    if (t.size() != y.size() || t.size() < 2)
      throw std::invalid_argument("sampled: need matching grids, size >= 2");
    for (std::size_t i = 1; i < t.size(); ++i) {
      if (!(t[i] > t[i - 1]))
        throw std::invalid_argument("sampled: grid must be strictly ascending");
      if (y[i] < y[i - 1] && std::isfinite(y[i]) && std::isfinite(y[i - 1]) &&
          y[i] < y[i - 1] - 1e-12 * std::max(1.0, std::abs(y[i - 1])))
        throw std::invalid_argument("sampled: values must be nondecreasing");
    }
    // An attained infinity must form a ray: once infinite, stay infinite.
    bool seen_inf = false;
    for (double v : y) {
      if (std::isinf(v)) seen_inf = true;
      else if (seen_inf)
        throw std::invalid_argument("sampled: {F = inf} must be a ray");
    }
    if (!(y.back() > 0.0))
      throw std::invalid_argument("sampled: F must be positive at the grid end");
    return OrliczFn(orlicz_form::Sampled{std::move(t), std::move(y), convex});
  }

  const Form& form() const { return form_; }

  template <typename T>
  const T* get_if() const {
    return std::get_if<T>(&form_);
  }

  ExtReal eval(double t) const {
    if (t < 0.0 || std::isnan(t))
      throw std::invalid_argument("OrliczFn::eval: t must be >= 0");
    return std::visit([&](const auto& f) { return eval_impl(f, t); }, form_);
  }

  /// Rigorous bound on the truncation error carried by eval at t; zero for
  /// exact closed forms.
  double tail_bound(double t) const {
    if (const auto* lac = get_if<orlicz_form::Lacunary>()) {
      // Tail exponents lie below r.back(); for t <= 1 each power is <= 1,
      // beyond 1 each is < t^{r_J}.
      return lac->tail_weight * std::max(1.0, std::pow(t, lac->r.back()));
    }
    return 0.0;
  }

  /// True when convexity is known structurally (power forms with p >= 1) or
  /// was asserted for a sampled function.
  bool is_convex_known() const {
    if (const auto* f = get_if<orlicz_form::PowerPhi>())
      return f->p >= Exponent(1.0);
    if (const auto* f = get_if<orlicz_form::PowerPsi>())
      return f->p >= Exponent(1.0);
    if (const auto* f = get_if<orlicz_form::Sampled>()) return f->convex;
    return false;
  }

  /// Start of the ray where the function is identically infinite, if the
  /// form can reach infinity: {F = inf} = (c, inf).
  bool infinity_ray(double* c) const {
    if (const auto* f = get_if<orlicz_form::PowerPhi>()) {
      if (f->p.is_infinite()) {
        *c = 1.0;
        return true;
      }
      return false;
    }
    if (const auto* f = get_if<orlicz_form::PowerPsi>()) {
      if (f->p.is_infinite()) {
        *c = 1.0;
        return true;
      }
      return false;
    }
    if (const auto* f = get_if<orlicz_form::Sampled>()) {
      for (std::size_t i = 0; i < f->y.size(); ++i) {
        if (std::isinf(f->y[i])) {
          *c = (i == 0) ? f->t.front() : f->t[i - 1];
          return true;
        }
      }
      return false;
    }
    return false;
  }

 private:
  explicit OrliczFn(Form f) : form_(std::move(f)) {}

  static ExtReal eval_impl(const orlicz_form::PowerPhi& f, double t) {
    return phi_pow(t, f.p);
  }

  static ExtReal eval_impl(const orlicz_form::PowerPsi& f, double t) {
    return psi_pow(t, f.p);
  }

  static ExtReal eval_impl(const orlicz_form::LogPerturbed& f, double t) {
    if (t == 0.0) return ExtReal(0.0);
    constexpr double kInvE = 0.36787944117144233;
    if (t <= kInvE)
      return ExtReal(std::pow(t, f.r) * std::pow(-std::log(t), f.a));
    return ExtReal(std::pow(t, f.r));
  }

  static ExtReal eval_impl(const orlicz_form::Mixture& f, double t) {
    ExtReal s(0.0);
    for (const auto& a : f.mu.atoms()) s += a.w * psi_pow(t, a.p);
    return s;
  }

  static ExtReal eval_impl(const orlicz_form::Lacunary& f, double t) {
    double s = 0.0;
    for (std::size_t n = 0; n < f.r.size(); ++n)
      s += f.b[n] * std::pow(t, f.r[n]);
    return ExtReal(s);
  }

  static ExtReal eval_impl(const orlicz_form::Sampled& f, double t) {
    if (t < f.t.front() || t > f.t.back())
      throw std::invalid_argument(
          "OrliczFn::eval: sampled form queried outside its grid (no "
          "extrapolation)");
    const auto it = std::lower_bound(f.t.begin(), f.t.end(), t);
    const std::size_t hi = static_cast<std::size_t>(it - f.t.begin());
    if (f.t[hi] == t)
      return std::isinf(f.y[hi]) ? ExtReal::infinity() : ExtReal(f.y[hi]);
    const std::size_t lo = hi - 1;
    // Left-continuity: infinite strictly past the last finite node.
    if (std::isinf(f.y[lo]) || std::isinf(f.y[hi])) return ExtReal::infinity();
    const double th = (t - f.t[lo]) / (f.t[hi] - f.t[lo]);
    return ExtReal(f.y[lo] + th * (f.y[hi] - f.y[lo]));
  }

  Form form_;
};

/// Builds the truncated lacunary series F(t) = sum_{n<=J} b_n t^{r_n} with
/// (r_n) strictly decreasing to r_limit and sum b_n = 1; the weight beyond
/// the truncation is recorded and reported by tail_bound().
inline OrliczFn lacunary_build(std::vector<double> r, std::vector<double> b,
                               std::size_t J, double r_limit) {
  if (J == 0 || r.size() < J || b.size() < J)
    throw std::invalid_argument("lacunary_build: need J >= 1 terms");
  r.resize(J);
  b.resize(J);
  double partial = 0.0;
  for (std::size_t n = 0; n < J; ++n) {
    if (!(r[n] > 0.0))
      throw std::invalid_argument("lacunary_build: exponents must be > 0");
    if (n > 0 && !(r[n] < r[n - 1]))
      throw std::invalid_argument(
          "lacunary_build: exponent sequence must be strictly decreasing");
    if (!(b[n] > 0.0))
      throw std::invalid_argument("lacunary_build: coefficients must be > 0");
    partial += b[n];
  }
  if (!(r_limit > 0.0) || r_limit > r.back())
    throw std::invalid_argument("lacunary_build: limit must be in (0, r_J]");
  if (partial > 1.0 + 1e-12)
    throw std::invalid_argument("lacunary_build: truncated weight exceeds 1");
  const double tail = std::max(0.0, 1.0 - partial);
  return OrliczFn::lacunary(
      orlicz_form::Lacunary{std::move(r), std::move(b), r_limit, tail});
}

struct LacunaryDecay {
  std::vector<double> ratios;  // F(10^-k) / 10^{-k r} for k = 2..6
  bool strictly_decreasing = false;
};

/// Diagnostic behind the "not an l_p space" conclusion: F(t)/t^r must decay
/// as t -> 0 whenever the series carries more than one exponent.
inline LacunaryDecay lacunary_decay_diagnostic(const OrliczFn& F) {
  const auto* lac = F.get_if<orlicz_form::Lacunary>();
  if (lac == nullptr)
    throw std::invalid_argument("lacunary_decay_diagnostic: not a lacunary form");
  LacunaryDecay out;
  for (int k = 2; k <= 6; ++k) {
    const double t = std::pow(10.0, -k);
    out.ratios.push_back(F.eval(t).value() / std::pow(t, lac->r_limit));
  }
  out.strictly_decreasing = true;
  for (std::size_t i = 1; i < out.ratios.size(); ++i)
    if (!(out.ratios[i] < out.ratios[i - 1])) out.strictly_decreasing = false;
  return out;
}

}  // namespace vexp
