#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vexp/grid.hpp"
#include "vexp/modular.hpp"
#include "vexp/verdict.hpp"

namespace vexp {

// ---------------------------------------------------------------------------
// Cantor pairing
// ---------------------------------------------------------------------------

/// sigma(x, y) = (x+y)(x+y+1)/2 + y, a bijection N^2 -> N (0-based).
inline std::size_t cantor_pair(std::size_t x, std::size_t y) {
  const std::size_t s = x + y;
  return s * (s + 1) / 2 + y;
}

/// Inverse of cantor_pair; .second is the beta component used to assign
/// exponents to coordinates.
inline std::pair<std::size_t, std::size_t> cantor_unpair(std::size_t n) {
  std::size_t s = static_cast<std::size_t>(
      (std::sqrt(8.0 * static_cast<double>(n) + 1.0) - 1.0) / 2.0);
  while (s * (s + 1) / 2 > n) --s;
  while ((s + 1) * (s + 2) / 2 <= n) ++s;
  const std::size_t y = n - s * (s + 1) / 2;
  return {s - y, y};
}

// ---------------------------------------------------------------------------
// Block families
// ---------------------------------------------------------------------------

// Finitely many pairwise disjointly supported nonzero vectors over a shared
// variable exponent.
struct BlockFamily {
  VarExponent exponent;
  std::vector<WeightedVector> blocks;

  BlockFamily(VarExponent P, std::vector<WeightedVector> xs)
      : exponent(std::move(P)), blocks(std::move(xs)) {
    if (blocks.empty()) throw std::invalid_argument("BlockFamily: no blocks");
    for (const auto& x : blocks) {
      detail::check_support(exponent, x, "BlockFamily");
      if (x.is_zero())
        throw std::invalid_argument("BlockFamily: blocks must be nonzero");
    }
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (std::size_t j = i + 1; j < blocks.size(); ++j)
        if (!WeightedVector::disjoint(blocks[i], blocks[j]))
          throw std::invalid_argument(
              "BlockFamily: supports must be pairwise disjoint (blocks " +
              std::to_string(i) + ", " + std::to_string(j) + ")");
  }
};

enum class DichotomyLabel { AllAbove, AllBelow, Mixed };

// Induced Orlicz data of a disjoint block family: per-block sampled
// F_n(t) = sum_i w_i Psi_{p_i}(t |x_n(i)|) (and the Phi variant), the
// normalization scale b, the finite-exponent functions G_n with
// F_n(t) = G_n(t b) for t <= 1/b, and the coefficients
// c_n = sum over finite-exponent atoms of w_i (|x_n(i)|/b)^{p_i} <= 1.
struct InducedOrlicz {
  Grid grid;
  double b = 0.0;
  std::vector<std::vector<double>> F_psi;  // may contain +inf
  std::vector<std::vector<double>> F_phi;
  std::vector<std::vector<double>> G;
  std::vector<double> c;
  DichotomyLabel label = DichotomyLabel::AllAbove;
};

inline InducedOrlicz induced_orlicz(const BlockFamily& X, const Grid& grid,
                                    double dichotomy_eps = 1e-6) {
  if (grid.back() > 1.0 + 1e-15)
    throw std::invalid_argument("induced_orlicz: grid must lie in [0, 1]");
  const VarExponent& P = X.exponent;
  InducedOrlicz out;
  out.grid = grid;
  for (const auto& x : X.blocks)
    out.b = std::max(out.b, luxemburg(P, x, ModularKind::phi));

  for (const auto& x : X.blocks) {
    std::vector<double> fpsi, fphi, g;
    fpsi.reserve(grid.size());
    fphi.reserve(grid.size());
    g.reserve(grid.size());
    for (double t : grid.pts) {
      fpsi.push_back(modular(P, x.scaled(t), ModularKind::psi).value.as_double());
      fphi.push_back(modular(P, x.scaled(t), ModularKind::phi).value.as_double());
      double gs = 0.0;
      for (const auto& e : x.entries()) {
        const auto& a = P.atom(e.i);
        if (a.p.is_infinite()) continue;
        const double p = a.p.finite_value();
        gs += a.w * (std::pow(t, p) / p) * std::pow(std::abs(e.v) / out.b, p);
      }
      g.push_back(gs);
    }
    out.F_psi.push_back(std::move(fpsi));
    out.F_phi.push_back(std::move(fphi));
    out.G.push_back(std::move(g));

    double cn = 0.0;
    for (const auto& e : x.entries()) {
      const auto& a = P.atom(e.i);
      if (a.p.is_infinite()) continue;
      cn += a.w * std::pow(std::abs(e.v) / out.b, a.p.finite_value());
    }
    out.c.push_back(cn);
  }

  const bool any_above = std::any_of(out.c.begin(), out.c.end(),
                                     [&](double v) { return v > dichotomy_eps; });
  const bool any_below = std::any_of(out.c.begin(), out.c.end(),
                                     [&](double v) { return v <= dichotomy_eps; });
  out.label = any_above && any_below ? DichotomyLabel::Mixed
              : any_above            ? DichotomyLabel::AllAbove
                                     : DichotomyLabel::AllBelow;
  return out;
}

// ---------------------------------------------------------------------------
// The sigma-block basis
// ---------------------------------------------------------------------------

// K disjoint copies of the profile (a_j) spread over coordinates sigma(k, j),
// over the variable exponent p_n = q_{beta(n)}. Every block has the same
// multiset of (exponent, coefficient) pairs, so the induced modular function
// F(t) = sum_j a_j^{q_j} t^{q_j} is common to all blocks, exactly.
struct BlockBasis {
  BlockFamily family;
  std::vector<double> q;
  std::vector<double> a;

  /// The common induced function F(t) = sum_j (t a_j)^{q_j}.
  double F(double t) const {
    double s = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j) s += std::pow(t * a[j], q[j]);
    return s;
  }
};

inline BlockBasis block_basis(std::vector<double> q, std::vector<double> a,
                              std::size_t K, bool auto_scale = false) {
  if (q.empty() || q.size() != a.size())
    throw std::invalid_argument("block_basis: q and a must match and be nonempty");
  if (K == 0) throw std::invalid_argument("block_basis: need K >= 1 blocks");
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (!(q[j] > 0.0)) throw std::invalid_argument("block_basis: q_j must be > 0");
    if (j > 0 && q[j] > q[j - 1])
      throw std::invalid_argument("block_basis: q must be nonincreasing");
    if (!(a[j] > 0.0)) throw std::invalid_argument("block_basis: a_j must be > 0");
  }

  auto normal_sum = [&](double scale) {
    double s = 0.0;
    for (std::size_t j = 0; j < q.size(); ++j)
      s += std::pow(scale * a[j], q[j]);
    return s;
  };
  if (std::abs(normal_sum(1.0) - 1.0) > 1e-10) {
    if (!auto_scale)
      throw std::invalid_argument(
          "block_basis: sum a_j^{q_j} = " + std::to_string(normal_sum(1.0)) +
          " != 1 (pass auto_scale to rescale)");
    // normal_sum is strictly increasing in the common factor.
    double lo = 0.0, hi = 1.0;
    while (normal_sum(hi) < 1.0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid == lo || mid == hi) break;
      (normal_sum(mid) < 1.0 ? lo : hi) = mid;
    }
    const double c = 0.5 * (lo + hi);
    for (auto& x : a) x *= c;
  }

  const std::size_t J = q.size();
  const std::size_t n_atoms = cantor_pair(K - 1, J - 1) + 1;
  std::vector<ExponentAtom> atoms;
  atoms.reserve(n_atoms);
  for (std::size_t n = 0; n < n_atoms; ++n) {
    const std::size_t beta = cantor_unpair(n).second;
    atoms.push_back(ExponentAtom{Exponent(q[std::min(beta, J - 1)]), 1.0});
  }
  VarExponent P(std::move(atoms));

  std::vector<WeightedVector> blocks;
  blocks.reserve(K);
  for (std::size_t k = 0; k < K; ++k) {
    std::vector<WeightedVector::Entry> es;
    es.reserve(J);
    for (std::size_t j = 0; j < J; ++j)
      es.push_back(WeightedVector::Entry{cantor_pair(k, j), a[j]});
    blocks.push_back(WeightedVector(std::move(es)));
  }
  return BlockBasis{BlockFamily(std::move(P), std::move(blocks)), std::move(q),
                    std::move(a)};
}

// ---------------------------------------------------------------------------
// Musielak embedding criterion
// ---------------------------------------------------------------------------

struct EmbedSearch {
  std::vector<double> delta_grid{1e-4, 1e-3, 1e-2};
  std::vector<double> b_grid{1.0, 2.0};
  std::vector<double> C_grid{1.0, 2.0, 4.0};
  double a_budget = 1e-6;
};

struct EmbedVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  double delta = 0.0, b = 0.0, C = 0.0;
  std::vector<double> a;     // per-index witness shifts
  std::size_t viol_n = 0;    // violating index, when found
  double viol_t = 0.0;
  std::string note;
};

namespace detail {

inline double interp_sampled(const Grid& grid, const std::vector<double>& y,
                             double x) {
  const auto& t = grid.pts;
  const auto it = std::lower_bound(t.begin(), t.end(), x);
  std::size_t hi = static_cast<std::size_t>(it - t.begin());
  if (hi == 0) return y[0];
  if (hi >= t.size()) return y.back();
  if (t[hi] == x) return y[hi];
  const std::size_t lo = hi - 1;
  if (std::isinf(y[lo]) || std::isinf(y[hi]))
    return std::numeric_limits<double>::infinity();
  const double th = (x - t[lo]) / (t[hi] - t[lo]);
  return y[lo] + th * (y[hi] - y[lo]);
}

}  // namespace detail

/// Finite surrogate of the sequence-space inclusion criterion: searches the
/// box for (delta, b, C, (a_n)) such that G_n(t) <= a_n + C F_n(bt) wherever
/// F_n(t) < delta, with sum a_n within budget. Ties break toward the smallest
/// b, then the smallest C. A violation is declared when, at the most generous
/// searched parameters, some index has G_n(t)/F_n(bt) increasing strictly
/// across the decades t = 1e-2, 1e-4, 1e-6.
inline EmbedVerdict musielak_embed_check(
    const Grid& grid, const std::vector<std::vector<double>>& F,
    const std::vector<std::vector<double>>& G, const EmbedSearch& search) {
  if (F.size() != G.size() || F.empty())
    throw std::invalid_argument("musielak_embed_check: family sizes must match");
  for (const auto& f : F)
    if (f.size() != grid.size())
      throw std::invalid_argument("musielak_embed_check: F grid mismatch");
  for (const auto& g : G)
    if (g.size() != grid.size())
      throw std::invalid_argument("musielak_embed_check: G grid mismatch");

  std::vector<double> bs = search.b_grid, Cs = search.C_grid,
                      deltas = search.delta_grid;
  std::sort(bs.begin(), bs.end());
  std::sort(Cs.begin(), Cs.end());
  std::sort(deltas.begin(), deltas.end());

  auto shift_needed = [&](std::size_t n, double delta, double b,
                          double C) -> double {
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double t = grid[i];
      if (!(F[n][i] < delta)) continue;
      if (b * t > grid.back() * (1.0 + 1e-15)) continue;
      const double fbt = detail::interp_sampled(grid, F[n], b * t);
      const double deficit =
          std::isinf(fbt) ? -std::numeric_limits<double>::infinity()
                          : G[n][i] - C * fbt;
      worst = std::max(worst, deficit);
    }
    return worst;
  };

  EmbedVerdict out;
  for (double b : bs)
    for (double C : Cs)
      for (double delta : deltas) {
        std::vector<double> a(F.size());
        double total = 0.0;
        for (std::size_t n = 0; n < F.size(); ++n) {
          a[n] = shift_needed(n, delta, b, C);
          total += a[n];
        }
        if (total <= search.a_budget) {
          out.kind = VerdictKind::WitnessFound;
          out.delta = delta;
          out.b = b;
          out.C = C;
          out.a = std::move(a);
          return out;
        }
      }

  const double b_top = bs.back(), C_top = Cs.back();
  for (std::size_t n = 0; n < F.size(); ++n) {
    double prev = -1.0;
    bool grows = true;
    double last_t = 0.0;
    for (double anchor : {1e-2, 1e-4, 1e-6}) {
      const std::size_t i = grid.nearest_index(anchor);
      const double t = grid[i];
      const double fbt = detail::interp_sampled(grid, F[n], b_top * t);
      const double ratio = fbt > 0.0 ? G[n][i] / (C_top * fbt)
                                     : std::numeric_limits<double>::infinity();
      if (prev >= 0.0 && !(ratio > prev)) {
        grows = false;
        break;
      }
      prev = ratio;
      last_t = t;
    }
    if (grows && prev > 1.0) {
      out.kind = VerdictKind::ViolationFound;
      out.viol_n = n;
      out.viol_t = last_t;
      out.note = "deficit ratio grows across decades at index " +
                 std::to_string(n);
      return out;
    }
  }
  out.note = "no witness within the searched box";
  return out;
}

// ---------------------------------------------------------------------------
// Dichotomy normalization
// ---------------------------------------------------------------------------

struct DichotomyResult {
  DichotomyLabel label = DichotomyLabel::AllAbove;
  std::vector<std::size_t> above;              // indices with c_n > eps
  std::vector<std::size_t> below;              // indices with c_n <= eps
  std::vector<std::vector<double>> normalized; // G_n / c_n for the above set
  double max_consecutive_distance = 0.0;       // sup gap between neighbours
  double below_sum = 0.0;                      // sum of the small c_n
};

/// Splits the family along the c_n dichotomy. Indices above eps get the
/// normalized functions G_n / c_n together with the largest sup-distance
/// between consecutive members (the finite stand-in for passing to a
/// subsequence); indices at or below eps are reported with their summed mass
/// (the l_inf degeneration branch).
inline DichotomyResult dichotomy_normalize(const InducedOrlicz& ind,
                                           double eps = 1e-6) {
  DichotomyResult out;
  for (std::size_t n = 0; n < ind.c.size(); ++n) {
    if (ind.c[n] > eps)
      out.above.push_back(n);
    else {
      out.below.push_back(n);
      out.below_sum += ind.c[n];
    }
  }
  out.label = out.above.empty()   ? DichotomyLabel::AllBelow
              : out.below.empty() ? DichotomyLabel::AllAbove
                                  : DichotomyLabel::Mixed;
  for (std::size_t n : out.above) {
    std::vector<double> g = ind.G[n];
    for (auto& v : g) v /= ind.c[n];
    out.normalized.push_back(std::move(g));
  }
  for (std::size_t k = 1; k < out.normalized.size(); ++k) {
    double d = 0.0;
    for (std::size_t i = 0; i < out.normalized[k].size(); ++i)
      d = std::max(d,
                   std::abs(out.normalized[k][i] - out.normalized[k - 1][i]));
    out.max_consecutive_distance = std::max(out.max_consecutive_distance, d);
  }
  return out;
}

}  // namespace vexp
