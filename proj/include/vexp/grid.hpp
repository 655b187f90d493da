#pragma once

#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vexp {

// An ascending evaluation grid. The default grid is 512 logarithmically
// spaced points on [1e-8, 1]: every near-zero comparison in the library is a
// statement on (0, c], and log spacing resolves power-law behaviour there.
struct Grid {
  std::vector<double> pts;

  static Grid log_spaced(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2)
      throw std::invalid_argument("Grid::log_spaced: need 0 < lo < hi, n >= 2");
    Grid g;
    g.pts.resize(n);
    const double step = std::log(hi / lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
      g.pts[i] = lo * std::exp(step * static_cast<double>(i));
    g.pts.front() = lo;
    g.pts.back() = hi;
    return g;
  }

  static Grid linear(double lo, double hi, std::size_t n) {
    if (!(hi > lo) || n < 2)
      throw std::invalid_argument("Grid::linear: need lo < hi, n >= 2");
    Grid g;
    g.pts.resize(n);
    const double step = (hi - lo) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
      g.pts[i] = lo + step * static_cast<double>(i);
    g.pts.front() = lo;
    g.pts.back() = hi;
    return g;
  }

  static Grid default_near_zero() { return log_spaced(1e-8, 1.0, 512); }

  /// Parses "log:<lo>:<hi>:<n>" or "lin:<lo>:<hi>:<n>".
  static Grid parse(const std::string& spec) {
    std::istringstream in(spec);
    std::string kind, lo_s, hi_s, n_s;
    if (!std::getline(in, kind, ':') || !std::getline(in, lo_s, ':') ||
        !std::getline(in, hi_s, ':') || !std::getline(in, n_s))
      throw std::invalid_argument("Grid::parse: expected kind:lo:hi:n, got '" +
                                  spec + "'");
    const double lo = std::stod(lo_s);
    const double hi = std::stod(hi_s);
    const std::size_t n = static_cast<std::size_t>(std::stoul(n_s));
    if (kind == "log") return log_spaced(lo, hi, n);
    if (kind == "lin") return linear(lo, hi, n);
    throw std::invalid_argument("Grid::parse: unknown kind '" + kind + "'");
  }

  std::size_t size() const { return pts.size(); }
  double front() const { return pts.front(); }
  double back() const { return pts.back(); }
  double operator[](std::size_t i) const { return pts[i]; }

  /// Index of the grid point closest to x.
  std::size_t nearest_index(double x) const {
    std::size_t best = 0;
    double bd = std::abs(pts[0] - x);
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const double d = std::abs(pts[i] - x);
      if (d < bd) {
        bd = d;
        best = i;
      }
    }
    return best;
  }
};

}  // namespace vexp
