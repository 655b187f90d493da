#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vexp/exponents.hpp"
#include "vexp/extended.hpp"

namespace vexp {

// A finitely supported function on the atoms of a VarExponent, stored as
// sorted (index, value) entries with implicit zeros elsewhere.
class WeightedVector {
 public:
  struct Entry {
    std::size_t i;
    double v;
  };

  WeightedVector() = default;

  explicit WeightedVector(std::vector<Entry> entries)
      : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(),
              [](const Entry& a, const Entry& b) { return a.i < b.i; });
    for (std::size_t k = 1; k < entries_.size(); ++k)
      if (entries_[k].i == entries_[k - 1].i)
        throw std::invalid_argument("WeightedVector: duplicate index");
    for (const auto& e : entries_)
      if (std::isnan(e.v) || std::isinf(e.v))
        throw std::invalid_argument("WeightedVector: values must be finite");
  }

  static WeightedVector dense(const std::vector<double>& values) {
    std::vector<Entry> es;
    es.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
      es.push_back(Entry{i, values[i]});
    return WeightedVector(std::move(es));
  }

  static WeightedVector unit(std::size_t i) {
    return WeightedVector({Entry{i, 1.0}});
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Entry& e) { return e.v == 0.0; });
  }

  double max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e.v));
    return m;
  }

  WeightedVector scaled(double c) const {
    std::vector<Entry> es = entries_;
    for (auto& e : es) e.v *= c;
    return WeightedVector(std::move(es));
  }

  WeightedVector abs() const {
    std::vector<Entry> es = entries_;
    for (auto& e : es) e.v = std::abs(e.v);
    return WeightedVector(std::move(es));
  }

  friend WeightedVector operator+(const WeightedVector& a,
                                  const WeightedVector& b) {
    std::vector<Entry> es;
    std::size_t ia = 0, ib = 0;
    while (ia < a.entries_.size() || ib < b.entries_.size()) {
      if (ib == b.entries_.size() ||
          (ia < a.entries_.size() && a.entries_[ia].i < b.entries_[ib].i)) {
        es.push_back(a.entries_[ia++]);
      } else if (ia == a.entries_.size() ||
                 b.entries_[ib].i < a.entries_[ia].i) {
        es.push_back(b.entries_[ib++]);
      } else {
        es.push_back(Entry{a.entries_[ia].i,
                           a.entries_[ia].v + b.entries_[ib].v});
        ++ia;
        ++ib;
      }
    }
    return WeightedVector(std::move(es));
  }

  /// Supports are disjoint when no index carries nonzero values in both.
  static bool disjoint(const WeightedVector& a, const WeightedVector& b) {
    std::size_t ia = 0, ib = 0;
    while (ia < a.entries_.size() && ib < b.entries_.size()) {
      if (a.entries_[ia].i < b.entries_[ib].i)
        ++ia;
      else if (b.entries_[ib].i < a.entries_[ia].i)
        ++ib;
      else {
        if (a.entries_[ia].v != 0.0 && b.entries_[ib].v != 0.0) return false;
        ++ia;
        ++ib;
      }
    }
    return true;
  }

 private:
  std::vector<Entry> entries_;
};

struct ModularValue {
  ExtReal value;
  bool infinite_part = false;  // an inf-exponent coordinate exceeded 1
};

enum class ModularKind { phi, psi };

namespace detail {

inline void check_support(const VarExponent& P, const WeightedVector& f,
                          const char* who) {
  for (const auto& e : f.entries())
    if (e.i >= P.size())
      throw std::invalid_argument(std::string(who) +
                                  ": vector index outside the atom list");
}

inline ExtReal atom_modular(ModularKind kind, Exponent p, double t) {
  return kind == ModularKind::phi ? phi_pow(t, p) : psi_pow(t, p);
}

}  // namespace detail

/// rho_P(f) = sum_i w_i Phi_{p_i}(|f_i|), with the 1^inf = 0 convention on
/// the infinite-exponent atoms.
inline ModularValue modular(const VarExponent& P, const WeightedVector& f,
                            ModularKind kind) {
  detail::check_support(P, f, "modular");
  ModularValue out;
  double acc = 0.0;
  for (const auto& e : f.entries()) {
    const auto& a = P.atom(e.i);
    const ExtReal m = detail::atom_modular(kind, a.p, std::abs(e.v));
    if (m.is_infinite()) {
      out.value = ExtReal::infinity();
      if (a.p.is_infinite()) out.infinite_part = true;
    } else {
      acc += a.w * m.value();
    }
  }
  if (!out.value.is_infinite()) out.value = ExtReal(acc);
  return out;
}

inline ModularValue modular_phi(const VarExponent& P, const WeightedVector& f) {
  return modular(P, f, ModularKind::phi);
}

inline ModularValue modular_psi(const VarExponent& P, const WeightedVector& f) {
  return modular(P, f, ModularKind::psi);
}

// ---------------------------------------------------------------------------
// Luxemburg gauge
// ---------------------------------------------------------------------------

/// Luxemburg gauge of f: the infinite-exponent coordinates contribute their
/// sup-norm through the max-split formula, and on the finite-exponent part
/// bisection solves sum_i w_i M(p_i, |f_i|/t) = 1 (the modular is continuous
/// and strictly decreasing in t there). tol is relative on the bracket;
/// tol = 0 runs to machine width.
inline double luxemburg(const VarExponent& P, const WeightedVector& f,
                        ModularKind kind, double tol = 0.0) {
  detail::check_support(P, f, "luxemburg");
  if (f.is_zero()) return 0.0;

  double m_inf = 0.0;
  struct FiniteEntry {
    double absv, w, p;
  };
  std::vector<FiniteEntry> fin;
  for (const auto& e : f.entries()) {
    if (e.v == 0.0) continue;
    const auto& a = P.atom(e.i);
    if (a.p.is_infinite())
      m_inf = std::max(m_inf, std::abs(e.v));
    else
      fin.push_back(FiniteEntry{std::abs(e.v), a.w, a.p.finite_value()});
  }
  if (fin.empty()) return m_inf;

  const auto finite_modular = [&](double t) {
    double s = 0.0;
    for (const auto& e : fin) {
      const double x = e.absv / t;
      const double mp =
          kind == ModularKind::phi ? std::pow(x, e.p) : std::pow(x, e.p) / e.p;
      s += e.w * mp;
      if (std::isinf(s)) return s;
    }
    return s;
  };

  double vmax = 0.0, p_min = fin.front().p;
  double mass = 0.0;  // sum w_i (Phi) or w_i / p_i (Psi)
  for (const auto& e : fin) {
    vmax = std::max(vmax, e.absv);
    p_min = std::min(p_min, e.p);
    mass += kind == ModularKind::phi ? e.w : e.w / e.p;
  }
  // At t = 2 vmax mass^{1/p_min} every coordinate satisfies x := |f_i|/t <= 1,
  // so M(p_i, x) <= mass_i x^{p_min} and the modular is below 2^{-p_min} < 1.
  // Nothing here raises |f_i| to a per-atom exponent, so a huge conjugate
  // exponent (q ~ 1e7 from p near 1) cannot overflow the bracket.
  double hi = 2.0 * vmax;
  if (mass > 1.0) {
    const double boost = std::pow(mass, 1.0 / p_min);
    if (std::isfinite(boost)) hi *= boost;
  }
  int guard = 0;
  while (finite_modular(hi) >= 1.0) {
    hi *= 2.0;
    if (++guard > 100000 || !std::isfinite(hi))
      throw std::runtime_error("luxemburg: failed to bracket the root");
  }

  double lo = 0.0;
  bool converged = false;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) {
      converged = true;  // bracket at machine width
      break;
    }
    if (finite_modular(mid) >= 1.0)
      lo = mid;
    else
      hi = mid;
    if (tol > 0.0 && (hi - lo) <= tol * hi) {
      converged = true;
      break;
    }
  }
  if (!converged && !(hi - lo <= std::max(tol, 1e-15) * hi))
    throw std::runtime_error("luxemburg: bisection did not converge, bracket [" +
                             std::to_string(lo) + ", " + std::to_string(hi) +
                             "]");
  return std::max(m_inf, 0.5 * (lo + hi));
}

// ---------------------------------------------------------------------------
// Norm attainment
// ---------------------------------------------------------------------------

enum class Attainment { AttainsOne, JumpsToInfinity };

/// Classifies f against the norm-attainment dichotomy: either the modular at
/// f/||f|| is exactly 1, or it is < 1 and every strictly larger scaling has
/// infinite modular. Any other outcome indicates a broken gauge and throws.
inline Attainment attainment(const VarExponent& P, const WeightedVector& f,
                             ModularKind kind, double tol = 1e-8) {
  if (f.is_zero()) throw std::invalid_argument("attainment: f must be nonzero");
  const double norm = luxemburg(P, f, kind);
  const double a = 1.0 / norm;
  const ModularValue at_a = modular(P, f.abs().scaled(a), kind);
  if (at_a.value.is_finite() && std::abs(at_a.value.value() - 1.0) <= tol)
    return Attainment::AttainsOne;
  if (at_a.value < ExtReal(1.0)) {
    const ModularValue above = modular(P, f.abs().scaled(a * (1.0 + tol)), kind);
    if (above.value.is_infinite()) return Attainment::JumpsToInfinity;
  }
  throw std::runtime_error(
      "attainment: neither dichotomy case matched within tolerance");
}

// ---------------------------------------------------------------------------
// Gauge ratio
// ---------------------------------------------------------------------------

struct GaugeRatio {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};

/// Empirical Phi-gauge / Psi-gauge ratio over sample vectors. At constant
/// exponent p the ratio is p^{1/p} in closed form.
inline GaugeRatio gauge_ratio(const VarExponent& P,
                              const std::vector<WeightedVector>& samples) {
  if (samples.empty())
    throw std::invalid_argument("gauge_ratio: no samples");
  GaugeRatio out;
  bool first = true;
  for (const auto& f : samples) {
    if (f.is_zero())
      throw std::invalid_argument("gauge_ratio: samples must be nonzero");
    const double r =
        luxemburg(P, f, ModularKind::phi) / luxemburg(P, f, ModularKind::psi);
    if (first) {
      out.min_ratio = out.max_ratio = r;
      first = false;
    } else {
      out.min_ratio = std::min(out.min_ratio, r);
      out.max_ratio = std::max(out.max_ratio, r);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Density change
// ---------------------------------------------------------------------------

struct DensityChange {
  double nu_modular = 0.0;     // finite-exponent modular of f under nu
  double mu_modular = 0.0;     // finite-exponent modular of f h under mu
  double lux_f_nu = 0.0;       // gauge of f in (P, nu)
  double lux_fh_mu = 0.0;      // gauge of f h in (P, mu)
  bool inf_rescaled = false;   // an inf atom carries h != 1
  bool agree = false;
};

/// The pointwise multiplier f -> f h against the reweighted measure
/// d nu = h_P d mu with h_P = h^P off Omega_inf and h on Omega_inf. The
/// finite-exponent modulars must match exactly; on Omega_inf the sup-norm
/// scales by h, which is flagged and folded into the norm comparison.
inline DensityChange density_change(const VarExponent& P,
                                    const WeightedVector& f,
                                    const std::vector<double>& h) {
  detail::check_support(P, f, "density_change");
  if (h.size() != P.size())
    throw std::invalid_argument("density_change: h must cover every atom");
  for (double x : h)
    if (!(x > 0.0))
      throw std::invalid_argument("density_change: h must be positive");

  std::vector<ExponentAtom> nu_atoms;
  nu_atoms.reserve(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) {
    const auto& a = P.atom(i);
    const double scale =
        a.p.is_infinite() ? h[i] : std::pow(h[i], a.p.finite_value());
    nu_atoms.push_back(ExponentAtom{a.p, a.w * scale});
  }
  const VarExponent nu(std::move(nu_atoms), P.tail());

  std::vector<WeightedVector::Entry> fh_entries;
  for (const auto& e : f.entries())
    fh_entries.push_back(WeightedVector::Entry{e.i, e.v * h[e.i]});
  const WeightedVector fh(std::move(fh_entries));

  DensityChange out;
  double m_inf_scaled = 0.0;
  {
    double nu_fin = 0.0, mu_fin = 0.0;
    for (const auto& e : f.entries()) {
      const auto& a = P.atom(e.i);
      if (a.p.is_infinite()) {
        if (h[e.i] != 1.0) out.inf_rescaled = true;
        m_inf_scaled = std::max(m_inf_scaled, std::abs(e.v) * h[e.i]);
        continue;
      }
      const double p = a.p.finite_value();
      nu_fin += nu.atom(e.i).w * std::pow(std::abs(e.v), p);
      mu_fin += a.w * std::pow(std::abs(e.v) * h[e.i], p);
    }
    out.nu_modular = nu_fin;
    out.mu_modular = mu_fin;
  }

  out.lux_f_nu = luxemburg(nu, f, ModularKind::phi);
  out.lux_fh_mu = luxemburg(P, fh, ModularKind::phi);

  // Predicted mu-side norm: the finite-exponent root is measure-invariant,
  // the inf part rescales coordinatewise by h.
  double predicted;
  {
    std::vector<WeightedVector::Entry> fin_only;
    for (const auto& e : f.entries())
      if (!P.atom(e.i).p.is_infinite()) fin_only.push_back(e);
    const double t_fin =
        fin_only.empty()
            ? 0.0
            : luxemburg(nu, WeightedVector(std::move(fin_only)),
                        ModularKind::phi);
    predicted = std::max(t_fin, m_inf_scaled);
  }

  out.agree = std::abs(out.nu_modular - out.mu_modular) <= 1e-12 &&
              std::abs(predicted - out.lux_fh_mu) <= 1e-9;
  return out;
}

}  // namespace vexp
