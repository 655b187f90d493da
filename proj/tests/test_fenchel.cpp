#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vexp/fenchel.hpp"
#include "vexp/rng.hpp"

using namespace vexp;

TEST_CASE("conjugate of Psi_2 is Psi_2") {
  const Grid grid = Grid::log_spaced(1e-8, 1.0, 256);
  const OrliczFn Fs = conjugate(OrliczFn::power_psi(Exponent(2.0)), grid);
  double worst = 0.0;
  for (double v : grid.pts)
    worst = std::max(worst,
                     std::abs(Fs.eval(v).value() - v * v / 2.0));
  CHECK(worst <= 1e-6);
}

TEST_CASE("conjugate of Psi_1 jumps at 1") {
  CHECK(fenchel_at(OrliczFn::power_psi(Exponent(1.0)), 0.5).value() == 0.0);
  CHECK(fenchel_at(OrliczFn::power_psi(Exponent(1.0)), 1.5).is_infinite());
}

TEST_CASE("conjugate of Psi_3 at 1") {
  // sup_u (u - u^3/3) is stationary at u = 1 with value 2/3.
  const ExtReal v = fenchel_at(OrliczFn::power_psi(Exponent(3.0)), 1.0);
  CHECK(v.value() == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("conjugate of the infinite power form is Psi_1") {
  for (double v : {0.25, 0.5, 1.0, 2.0}) {
    const ExtReal fs = fenchel_at(OrliczFn::power_psi(Exponent::infinity()), v);
    CHECK(fs.value() == doctest::Approx(v).epsilon(1e-10));
  }
}

TEST_CASE("conjugate of Psi_1 over (0, 1] is rejected as degenerate") {
  // Psi_1* is identically zero below its jump at 1, so a grid inside [0, 1]
  // samples no positive value and cannot represent an Orlicz function.
  CHECK_THROWS_AS(conjugate(OrliczFn::power_psi(Exponent(1.0)),
                            Grid::log_spaced(1e-8, 1.0, 64)),
                  std::invalid_argument);
  // Past the jump the tabulation carries the infinity marker.
  const OrliczFn Fs = conjugate(OrliczFn::power_psi(Exponent(1.0)),
                                Grid::linear(0.5, 1.5, 11));
  CHECK(Fs.eval(0.75).value() == 0.0);
  CHECK(Fs.eval(1.5).is_infinite());
}

TEST_CASE("conjugation rejects nonconvex input") {
  CHECK_THROWS_AS(fenchel_at(OrliczFn::power_psi(Exponent(0.5)), 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(fenchel_at(OrliczFn::log_perturbed(2.0, 1.0), 1.0),
                  std::invalid_argument);
}

TEST_CASE("Fenchel-Young on random power forms") {
  SplitMix64 root(91);
  std::size_t violations = 0;
  for (std::size_t k = 0; k < 300; ++k) {
    SplitMix64 rng = case_rng(root.next(), k);
    const Exponent p(rng.log_uniform(1.0, 8.0));
    const OrliczFn F = rng.uniform01() < 0.5 ? OrliczFn::power_psi(p)
                                             : OrliczFn::power_phi(p);
    const double u = rng.uniform(0.0, 2.0), v = rng.uniform(0.0, 2.0);
    const ExtReal Fs = fenchel_at(F, v);
    if (Fs.is_infinite()) continue;
    if (u * v > F.eval(u).value() + Fs.value() + 1e-9) ++violations;
  }
  CHECK(violations == 0);
}

TEST_CASE("biconjugation recovers the power forms") {
  const Grid dense = Grid::log_spaced(1e-8, 1.0, 4096);
  for (double p : {1.5, 2.0, 3.0}) {
    const OrliczFn F = OrliczFn::power_psi(Exponent(p));
    const OrliczFn Fss = conjugate(conjugate(F, dense), dense);
    double worst = 0.0;
    for (std::size_t i = 0; i < dense.size(); i += 5)
      worst = std::max(worst, std::abs(Fss.eval(dense[i]).value() -
                                       F.eval(dense[i]).value()));
    CHECK(worst <= 1e-5);
  }
}

TEST_CASE("orlicz_bound certifies the dual bound") {
  const OrliczFn F = OrliczFn::power_psi(Exponent(2.0));
  SUBCASE("unit data") {
    // Hypothesis u <= u^2/2 + 1 on [0, 1]; w = min{1, 1/2}; Psi_2*(0.5) = 1/8.
    const OrliczBoundResult r = orlicz_bound(F, 1.0, 1.0, 1.0, 1.0);
    CHECK(r.w == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.fstar_w.value() == doctest::Approx(0.125).epsilon(1e-9));
    CHECK(r.bound_ok);
  }
  SUBCASE("scaled data") {
    const OrliczBoundResult r = orlicz_bound(F, 1.0, 2.0, 0.5, 1.0);
    CHECK(r.w == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r.fstar_w.value() == doctest::Approx(0.125).epsilon(1e-9));
    CHECK(r.budget == doctest::Approx(0.25));
    CHECK(r.bound_ok);
  }
  SUBCASE("degenerate small v") {
    const OrliczBoundResult r = orlicz_bound(F, 1.0, 1.0, 1.0, 1e-9);
    CHECK(r.w <= 1e-9);
    CHECK(r.fstar_w.value() <= 1e-12);
    CHECK(r.bound_ok);
  }
  SUBCASE("failed hypothesis is reported with the witness point") {
    // u * 10 <= u^2/2 + 0.1 fails well inside [0, 1].
    CHECK_THROWS_AS(orlicz_bound(F, 1.0, 1.0, 0.1, 10.0),
                    std::invalid_argument);
  }
}

TEST_CASE("conjugate of a convex sampled function") {
  const Grid grid = Grid::log_spaced(1e-6, 1.0, 512);
  std::vector<double> y;
  for (double t : grid.pts) y.push_back(t * t / 2.0);
  const OrliczFn S = OrliczFn::sampled(grid.pts, y, true);
  const OrliczFn Ss = conjugate(S, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.size(); i += 9)
    worst = std::max(worst, std::abs(Ss.eval(grid[i]).value() -
                                     grid[i] * grid[i] / 2.0));
  CHECK(worst <= 1e-5);
}
