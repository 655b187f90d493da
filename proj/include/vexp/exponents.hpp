#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "vexp/extended.hpp"

namespace vexp {

// An exponent value in (0, inf], with infinity as a tagged state rather than
// an IEEE infinity. The power-function conventions attached to the infinite
// exponent (1^inf = 0) are implemented in phi_pow / psi_pow below and never
// go through floating-point pow.
class Exponent {
 public:
  Exponent(double v) {  // NOLINT(runtime/explicit): value-type conversions intended
    if (std::isnan(v)) throw std::invalid_argument("Exponent: NaN not admitted");
    if (std::isinf(v)) {
      if (v < 0) throw std::invalid_argument("Exponent: negative infinity");
      inf_ = true;
      v_ = 0.0;
      return;
    }
    if (v <= 0.0) throw std::invalid_argument("Exponent: must be positive");
    v_ = v;
  }

  static Exponent infinity() {
    return Exponent(std::numeric_limits<double>::infinity());
  }

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }

  double finite_value() const {
    if (inf_) throw std::logic_error("Exponent: finite_value() of infinity");
    return v_;
  }

  double as_double() const {
    return inf_ ? std::numeric_limits<double>::infinity() : v_;
  }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }
  friend bool operator<(const Exponent& a, const Exponent& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Exponent& a, const Exponent& b) { return !(b < a); }
  friend bool operator>(const Exponent& a, const Exponent& b) { return b < a; }
  friend bool operator>=(const Exponent& a, const Exponent& b) { return !(a < b); }

 private:
  double v_ = 0.0;
  bool inf_ = false;
};

/// 0^e = 0 for every e >= 0 (the 0^0 = 0 convention).
inline double pow0(double base, double e) {
  if (base == 0.0) return 0.0;
  return std::pow(base, e);
}

/// Phi_p(t) = t^p, with Phi_inf = inf * chi_(1,inf) and 1^inf = 0.
inline ExtReal phi_pow(double t, Exponent p) {
  if (t < 0.0 || std::isnan(t)) throw std::invalid_argument("phi_pow: t must be >= 0");
  if (p.is_infinite()) {
    if (std::isinf(t) || t > 1.0) return ExtReal::infinity();
    return ExtReal(0.0);
  }
  if (std::isinf(t)) return ExtReal::infinity();
  return ExtReal(std::pow(t, p.finite_value()));
}

/// Psi_p(t) = t^p / p; Psi_inf = Phi_inf.
inline ExtReal psi_pow(double t, Exponent p) {
  if (p.is_infinite()) return phi_pow(t, p);
  if (t < 0.0 || std::isnan(t)) throw std::invalid_argument("psi_pow: t must be >= 0");
  if (std::isinf(t)) return ExtReal::infinity();
  return ExtReal(std::pow(t, p.finite_value()) / p.finite_value());
}

/// (t^p - u^p)/p for 0 <= u <= t <= 1; equals 0 when p = inf (both powers
/// vanish under the 1^inf = 0 convention and the denominator is infinite).
inline double psi_diff(Exponent p, double u, double t) {
  if (u < 0.0 || t < u || t > 1.0)
    throw std::invalid_argument("psi_diff: need 0 <= u <= t <= 1");
  if (p.is_infinite()) return 0.0;
  const double pv = p.finite_value();
  return (std::pow(t, pv) - std::pow(u, pv)) / pv;
}

/// Conjugate exponent p' with 1/p + 1/p' = 1; 1 -> inf, inf -> 1.
inline Exponent conjugate_exponent(Exponent p) {
  if (p.is_infinite()) return Exponent(1.0);
  const double v = p.finite_value();
  if (v < 1.0)
    throw std::invalid_argument("conjugate_exponent: undefined for p < 1");
  if (v == 1.0) return Exponent::infinity();
  return Exponent(v / (v - 1.0));
}

// Tail behaviour of an infinitely supported exponent sequence, declared
// rather than inferred: the limit-point set of a sequence is an asymptotic
// notion that no finite prefix determines.
class TailSpec {
 public:
  enum class Kind { none, constant, convergent, periodic };

  TailSpec() : kind_(Kind::none) {}

  static TailSpec none() { return TailSpec(); }
  static TailSpec constant(Exponent p) { return TailSpec(Kind::constant, {p}); }
  static TailSpec convergent(Exponent p) { return TailSpec(Kind::convergent, {p}); }
  static TailSpec periodic(std::vector<Exponent> ps) {
    if (ps.empty()) throw std::invalid_argument("TailSpec: empty period");
    return TailSpec(Kind::periodic, std::move(ps));
  }

  Kind kind() const { return kind_; }
  const std::vector<Exponent>& values() const { return ps_; }

  /// Limit points contributed by the tail (empty for kind none).
  std::vector<Exponent> limit_points() const {
    switch (kind_) {
      case Kind::none:
        return {};
      case Kind::constant:
      case Kind::convergent:
        return ps_;
      case Kind::periodic: {
        std::vector<Exponent> out = ps_;
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      }
    }
    return {};
  }

 private:
  TailSpec(Kind k, std::vector<Exponent> ps) : kind_(k), ps_(std::move(ps)) {}

  Kind kind_;
  std::vector<Exponent> ps_;
};

struct ExponentAtom {
  Exponent p;
  double w;  // atom measure, > 0
};

// A variable exponent over a finite atomic measure space: an ordered list of
// (exponent, weight) atoms plus an optional tail declaration for asymptotic
// queries. Immutable after construction.
class VarExponent {
 public:
  explicit VarExponent(std::vector<ExponentAtom> atoms,
                       TailSpec tail = TailSpec::none())
      : atoms_(std::move(atoms)), tail_(std::move(tail)) {
    if (atoms_.empty()) throw std::invalid_argument("VarExponent: no atoms");
    for (const auto& a : atoms_) {
      if (!(a.w > 0.0) || std::isinf(a.w) || std::isnan(a.w))
        throw std::invalid_argument("VarExponent: weights must be positive finite");
    }
  }

  /// Constant exponent p on n atoms of weight w.
  static VarExponent constant(Exponent p, std::size_t n, double w = 1.0) {
    return VarExponent(std::vector<ExponentAtom>(n, ExponentAtom{p, w}));
  }

  std::size_t size() const { return atoms_.size(); }
  const ExponentAtom& atom(std::size_t i) const { return atoms_.at(i); }
  const std::vector<ExponentAtom>& atoms() const { return atoms_; }
  const TailSpec& tail() const { return tail_; }

  /// P^- : minimum of the essential range (atoms plus declared tail limits).
  Exponent p_min() const { return range_extreme(true); }
  /// P^+ : maximum of the essential range.
  Exponent p_max() const { return range_extreme(false); }
  /// P^c = min{1, P^-}.
  Exponent p_c() const {
    const Exponent m = p_min();
    return m < Exponent(1.0) ? m : Exponent(1.0);
  }

  bool has_infinite_atoms() const {
    return std::any_of(atoms_.begin(), atoms_.end(),
                       [](const ExponentAtom& a) { return a.p.is_infinite(); });
  }

  /// Convex in the paper's sense: every exponent >= 1.
  bool is_convex() const {
    return std::all_of(atoms_.begin(), atoms_.end(),
                       [](const ExponentAtom& a) { return a.p >= Exponent(1.0); });
  }

  /// Indices of atoms carrying the infinite exponent (Omega_inf).
  std::vector<std::size_t> infinite_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (atoms_[i].p.is_infinite()) out.push_back(i);
    return out;
  }

  /// Indices with exponent >= 1 (Omega_c).
  std::vector<std::size_t> convex_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < atoms_.size(); ++i)
      if (atoms_[i].p >= Exponent(1.0)) out.push_back(i);
    return out;
  }

  /// Atomwise conjugate exponent; requires every atom >= 1.
  VarExponent conjugate() const {
    std::vector<ExponentAtom> out;
    out.reserve(atoms_.size());
    for (const auto& a : atoms_)
      out.push_back(ExponentAtom{conjugate_exponent(a.p), a.w});
    return VarExponent(std::move(out));
  }

 private:
  Exponent range_extreme(bool want_min) const {
    std::vector<Exponent> r = essential_range_of(*this);
    return want_min ? r.front() : r.back();
  }

  friend std::vector<Exponent> essential_range_of(const VarExponent& P);

  std::vector<ExponentAtom> atoms_;
  TailSpec tail_;
};

/// Sorted duplicate-free list of atom exponents plus declared tail limits.
inline std::vector<Exponent> essential_range_of(const VarExponent& P) {
  std::vector<Exponent> out;
  out.reserve(P.atoms_.size());
  for (const auto& a : P.atoms_) out.push_back(a.p);
  for (const auto& p : P.tail_.limit_points()) out.push_back(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<Exponent> essential_range(const VarExponent& P) {
  return essential_range_of(P);
}

/// A(P): limit points of the sequence, read off the declared tail.
inline std::vector<Exponent> limit_points(const VarExponent& P) {
  if (P.tail().kind() == TailSpec::Kind::none)
    throw std::invalid_argument(
        "limit_points: undefined for finitely supported exponents (no tail)");
  return P.tail().limit_points();
}

}  // namespace vexp
