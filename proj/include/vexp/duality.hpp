#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vexp/modular.hpp"

namespace vexp {

// ---------------------------------------------------------------------------
// Kernel operators
// ---------------------------------------------------------------------------

// A nonnegative kernel over two finite atom sets, with the atom measures
// attached so the operator and its adjoint integrate against the right
// weights.
struct KernelMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<double> entries;      // row-major, rows x cols, >= 0
  std::vector<double> row_weights;  // measure on the domain index set
  std::vector<double> col_weights;  // measure on the codomain index set

  KernelMatrix(std::size_t r, std::size_t c, std::vector<double> e,
               std::vector<double> rw, std::vector<double> cw)
      : rows(r), cols(c), entries(std::move(e)), row_weights(std::move(rw)),
        col_weights(std::move(cw)) {
    if (entries.size() != rows * cols || row_weights.size() != rows ||
        col_weights.size() != cols)
      throw std::invalid_argument("KernelMatrix: dimension mismatch");
    for (double x : entries)
      if (x < 0.0 || std::isnan(x))
        throw std::invalid_argument("KernelMatrix: entries must be >= 0");
  }

  double at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/// T(f)(j) = sum_i K(i, j) f_i w_i.
inline std::vector<double> kernel_apply(const KernelMatrix& K,
                                        const std::vector<double>& f) {
  if (f.size() != K.rows)
    throw std::invalid_argument("kernel_apply: dimension mismatch");
  std::vector<double> out(K.cols, 0.0);
  for (std::size_t i = 0; i < K.rows; ++i) {
    const double fw = f[i] * K.row_weights[i];
    if (fw == 0.0) continue;
    for (std::size_t j = 0; j < K.cols; ++j) out[j] += K.at(i, j) * fw;
  }
  return out;
}

/// T'(g)(i) = sum_j K(i, j) g_j v_j.
inline std::vector<double> kernel_adjoint_apply(const KernelMatrix& K,
                                                const std::vector<double>& g) {
  if (g.size() != K.cols)
    throw std::invalid_argument("kernel_adjoint_apply: dimension mismatch");
  std::vector<double> out(K.rows, 0.0);
  for (std::size_t i = 0; i < K.rows; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < K.cols; ++j)
      acc += K.at(i, j) * g[j] * K.col_weights[j];
    out[i] = acc;
  }
  return out;
}

/// <u, v>_w = sum_i u_i v_i w_i.
inline double weighted_dot(const std::vector<double>& u,
                           const std::vector<double>& v,
                           const std::vector<double>& w) {
  if (u.size() != v.size() || u.size() != w.size())
    throw std::invalid_argument("weighted_dot: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i] * w[i];
  return s;
}

// ---------------------------------------------------------------------------
// Hoelder pairing
// ---------------------------------------------------------------------------

enum class HolderBound { Ok, Violated, NotApplicable };

struct HolderResult {
  double pairing = 0.0;
  double psi_gauge_f = 0.0;  // Psi-gauge of f in L_P
  double psi_gauge_g = 0.0;  // Psi-gauge of g in L_Q
  HolderBound bound = HolderBound::NotApplicable;
};

/// Pairing sum_i w_i f_i g_i against the constant-2 bound, which applies
/// whenever both Psi-gauges are at most 1 (f in L_P, g in L_Q with Q the
/// atomwise conjugate).
inline HolderResult holder_pair(const VarExponent& P, const WeightedVector& f,
                                const WeightedVector& g) {
  if (!P.is_convex())
    throw std::invalid_argument("holder_pair: every exponent must be >= 1");
  detail::check_support(P, f, "holder_pair");
  detail::check_support(P, g, "holder_pair");
  const VarExponent Q = P.conjugate();

  HolderResult out;
  {
    std::size_t ia = 0, ib = 0;
    const auto& fe = f.entries();
    const auto& ge = g.entries();
    while (ia < fe.size() && ib < ge.size()) {
      if (fe[ia].i < ge[ib].i)
        ++ia;
      else if (ge[ib].i < fe[ia].i)
        ++ib;
      else {
        out.pairing += P.atom(fe[ia].i).w * fe[ia].v * ge[ib].v;
        ++ia;
        ++ib;
      }
    }
  }
  out.psi_gauge_f = luxemburg(P, f, ModularKind::psi);
  out.psi_gauge_g = luxemburg(Q, g, ModularKind::psi);
  if (out.psi_gauge_f <= 1.0 + 1e-12 && out.psi_gauge_g <= 1.0 + 1e-12)
    out.bound = out.pairing <= 2.0 + 1e-12 ? HolderBound::Ok
                                           : HolderBound::Violated;
  return out;
}

// ---------------------------------------------------------------------------
// Norming pairs
// ---------------------------------------------------------------------------

// f = g^{Q-1} paired against g, with pairing = rho_P(f) = rho_Q(g) = 1.
// Fields are plain so diagnostics can inject a controlled defect.
struct NormingPair {
  WeightedVector f;
  WeightedVector g;
  double pairing = 0.0;
  double rho_p = 0.0;
  double rho_q = 0.0;
};

/// Builds the norming pair for g with Phi-gauge 1 in L_Q. Requires the
/// exponent to be finite and > 1 on supp(g): at q = infinity the 1^inf = 0
/// convention zeroes f and breaks supp(f) = supp(g), and at q = 1 the
/// conjugate side degenerates.
inline NormingPair norming_pair(const VarExponent& Q, const WeightedVector& g,
                                double tol = 1e-9) {
  detail::check_support(Q, g, "norming_pair");
  if (!Q.is_convex())
    throw std::invalid_argument("norming_pair: Q must be convex (atoms >= 1)");
  for (const auto& e : g.entries()) {
    if (e.v < 0.0)
      throw std::invalid_argument("norming_pair: g must be nonnegative");
    if (e.v == 0.0) continue;
    const Exponent q = Q.atom(e.i).p;
    if (q.is_infinite() || !(q.finite_value() > 1.0))
      throw std::invalid_argument(
          "norming_pair: exponent on supp(g) must be finite and > 1");
  }
  const double gauge = luxemburg(Q, g, ModularKind::phi);
  if (std::abs(gauge - 1.0) > tol)
    throw std::invalid_argument("norming_pair: g must have Phi-gauge 1, got " +
                                std::to_string(gauge));

  std::vector<WeightedVector::Entry> fe;
  for (const auto& e : g.entries()) {
    const double q = Q.atom(e.i).p.finite_value();
    fe.push_back(WeightedVector::Entry{e.i, pow0(e.v, q - 1.0)});
  }
  NormingPair pair;
  pair.f = WeightedVector(std::move(fe));
  pair.g = g;

  const VarExponent P = Q.conjugate();
  for (const auto& e : g.entries()) {
    const double w = Q.atom(e.i).w;
    pair.pairing += w * pow0(e.v, Q.atom(e.i).p.finite_value() - 1.0) * e.v;
  }
  pair.rho_p = modular_phi(P, pair.f).value.value();
  pair.rho_q = modular_phi(Q, g).value.value();

  if (std::abs(pair.pairing - 1.0) > tol || std::abs(pair.rho_p - 1.0) > tol ||
      std::abs(pair.rho_q - 1.0) > tol)
    throw std::runtime_error(
        "norming_pair: identity pairing = rho_P = rho_Q = 1 failed "
        "(pairing = " +
        std::to_string(pair.pairing) + ", rho_P = " + std::to_string(pair.rho_p) +
        ", rho_Q = " + std::to_string(pair.rho_q) + ")");
  return pair;
}

// ---------------------------------------------------------------------------
// Norming-pair projection
// ---------------------------------------------------------------------------

// T (a_n) = sum a_n f_n and S'(h) = (<g_n, h>)_n assembled from disjoint
// norming pairs; S' o T should be the identity on coefficients. Dense
// representation, desk scale.
struct Projection {
  VarExponent exponent;
  std::vector<NormingPair> pairs;
  std::vector<std::vector<double>> gram;  // gram[m][n] = <g_m, f_n>
  double residual = 0.0;                  // max_n |(S' o T)(e_n) - e_n|_inf

  WeightedVector apply_T(const std::vector<double>& a) const {
    if (a.size() != pairs.size())
      throw std::invalid_argument("Projection::apply_T: dimension mismatch");
    WeightedVector acc;
    for (std::size_t n = 0; n < a.size(); ++n)
      acc = acc + pairs[n].f.scaled(a[n]);
    return acc;
  }

  std::vector<double> apply_S(const WeightedVector& h) const {
    std::vector<double> out(pairs.size(), 0.0);
    for (std::size_t n = 0; n < pairs.size(); ++n) {
      const auto& ge = pairs[n].g.entries();
      const auto& he = h.entries();
      std::size_t ia = 0, ib = 0;
      while (ia < ge.size() && ib < he.size()) {
        if (ge[ia].i < he[ib].i)
          ++ia;
        else if (he[ib].i < ge[ia].i)
          ++ib;
        else {
          out[n] += exponent.atom(ge[ia].i).w * ge[ia].v * he[ib].v;
          ++ia;
          ++ib;
        }
      }
    }
    return out;
  }
};

inline Projection build_projection(const VarExponent& P,
                                   std::vector<NormingPair> pairs) {
  if (pairs.empty())
    throw std::invalid_argument("build_projection: no pairs");
  for (std::size_t m = 0; m < pairs.size(); ++m) {
    detail::check_support(P, pairs[m].f, "build_projection");
    detail::check_support(P, pairs[m].g, "build_projection");
    for (std::size_t n = m + 1; n < pairs.size(); ++n)
      if (!WeightedVector::disjoint(pairs[m].g, pairs[n].f) ||
          !WeightedVector::disjoint(pairs[m].f, pairs[n].g) ||
          !WeightedVector::disjoint(pairs[m].f, pairs[n].f))
        throw std::invalid_argument(
            "build_projection: pair supports must be pairwise disjoint");
  }
  Projection proj{P, std::move(pairs), {}, 0.0};
  const std::size_t N = proj.pairs.size();
  proj.gram.assign(N, std::vector<double>(N, 0.0));
  for (std::size_t n = 0; n < N; ++n) {
    std::vector<double> e_n(N, 0.0);
    e_n[n] = 1.0;
    const std::vector<double> img = proj.apply_S(proj.apply_T(e_n));
    for (std::size_t m = 0; m < N; ++m) {
      proj.gram[m][n] = img[m];
      const double target = (m == n) ? 1.0 : 0.0;
      proj.residual = std::max(proj.residual, std::abs(img[m] - target));
    }
  }
  return proj;
}

}  // namespace vexp
