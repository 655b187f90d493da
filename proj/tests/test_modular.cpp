#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vexp/modular.hpp"
#include "vexp/rng.hpp"

using namespace vexp;

namespace {

VarExponent constant2(std::size_t n) {
  return VarExponent::constant(Exponent(2.0), n);
}

}  // namespace

TEST_CASE("modular values") {
  const WeightedVector f34 = WeightedVector::dense({3.0, 4.0});
  CHECK(modular_phi(constant2(2), f34).value.value() == 25.0);
  CHECK(modular_psi(constant2(2), f34).value.value() == 12.5);

  const VarExponent P12({{Exponent(1.0), 1.0}, {Exponent(2.0), 1.0}});
  const WeightedVector ones = WeightedVector::dense({1.0, 1.0});
  CHECK(modular_phi(P12, ones).value.value() == 2.0);
  CHECK(modular_psi(P12, ones).value.value() == 1.5);

  const VarExponent Pinf({{Exponent::infinity(), 1.0}});
  CHECK(modular_phi(Pinf, WeightedVector::dense({0.5})).value.value() == 0.0);
  CHECK(modular_psi(Pinf, WeightedVector::dense({1.0})).value.value() == 0.0);
  const ModularValue over = modular_phi(Pinf, WeightedVector::dense({1.5}));
  CHECK(over.value.is_infinite());
  CHECK(over.infinite_part);
}

TEST_CASE("luxemburg gauge basics") {
  CHECK(luxemburg(constant2(2), WeightedVector::dense({3.0, 4.0}),
                  ModularKind::phi) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(luxemburg(constant2(2), WeightedVector(), ModularKind::phi) == 0.0);

  // Mixed (1, 2) exponent at (1, 1): 1/t + 1/t^2 = 1 solves to the golden
  // ratio; frozen from the quadratic root (1 + sqrt 5)/2.
  const VarExponent P12({{Exponent(1.0), 1.0}, {Exponent(2.0), 1.0}});
  const double lux =
      luxemburg(P12, WeightedVector::dense({1.0, 1.0}), ModularKind::phi);
  CHECK(std::abs(lux - 1.6180339887498949) <= 1e-10);

  // Max-split with an infinite-exponent coordinate.
  const VarExponent Pmix({{Exponent::infinity(), 1.0}, {Exponent(2.0), 1.0}});
  CHECK(luxemburg(Pmix, WeightedVector::dense({2.0, 3.0}), ModularKind::phi) ==
        doctest::Approx(3.0).epsilon(1e-12));
  const VarExponent Pinf({{Exponent::infinity(), 1.0}});
  CHECK(luxemburg(Pinf, WeightedVector::dense({2.0}), ModularKind::phi) == 2.0);
}

TEST_CASE("luxemburg matches the closed-form l_p norm") {
  SplitMix64 root(1001);
  for (int k = 0; k < 500; ++k) {
    SplitMix64 rng = case_rng(root.next(), k);
    const double p = rng.log_uniform(0.5, 10.0);
    const std::size_t n = 1 + rng.uniform_int(0, 9);
    std::vector<ExponentAtom> atoms;
    std::vector<WeightedVector::Entry> es;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = rng.uniform(0.1, 2.0);
      const double v = rng.uniform(-2.0, 2.0);
      atoms.push_back({Exponent(p), w});
      es.push_back({i, v});
      sum += w * std::pow(std::abs(v), p);
    }
    if (sum == 0.0) continue;
    const double closed = std::pow(sum, 1.0 / p);
    const double lux = luxemburg(VarExponent(std::move(atoms)),
                                 WeightedVector(std::move(es)),
                                 ModularKind::phi);
    CHECK(std::abs(lux - closed) <= 1e-10 * closed);
  }
}

TEST_CASE("attainment dichotomy") {
  SUBCASE("finite exponents always attain") {
    CHECK(attainment(constant2(2), WeightedVector::dense({3.0, 4.0}),
                     ModularKind::phi) == Attainment::AttainsOne);
  }
  SUBCASE("pure infinity jumps") {
    const VarExponent Pinf({{Exponent::infinity(), 1.0}});
    CHECK(attainment(Pinf, WeightedVector::dense({1.0}), ModularKind::phi) ==
          Attainment::JumpsToInfinity);
  }
  SUBCASE("mixed (1, inf) attains at 1") {
    const VarExponent P({{Exponent(1.0), 1.0}, {Exponent::infinity(), 1.0}});
    const WeightedVector f = WeightedVector::dense({1.0, 1.0});
    CHECK(luxemburg(P, f, ModularKind::phi) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(attainment(P, f, ModularKind::phi) == Attainment::AttainsOne);
  }
  SUBCASE("zero vector rejected") {
    CHECK_THROWS_AS(attainment(constant2(1), WeightedVector(), ModularKind::phi),
                    std::invalid_argument);
  }
}

TEST_CASE("gauge ratio at constant exponent is p^{1/p}") {
  SplitMix64 rng(777);
  for (double p : {0.5, 1.0, 2.0, 4.0}) {
    const VarExponent P = VarExponent::constant(Exponent(p), 4);
    std::vector<WeightedVector> samples;
    for (int k = 0; k < 8; ++k) {
      std::vector<WeightedVector::Entry> es;
      for (std::size_t i = 0; i < 4; ++i)
        es.push_back({i, rng.uniform(0.1, 3.0)});
      samples.push_back(WeightedVector(std::move(es)));
    }
    const GaugeRatio r = gauge_ratio(P, samples);
    const double target = std::pow(p, 1.0 / p);
    CHECK(std::abs(r.min_ratio - target) <= 1e-9);
    CHECK(std::abs(r.max_ratio - target) <= 1e-9);
  }
}

TEST_CASE("density change") {
  SUBCASE("finite exponents: modulars match exactly") {
    const VarExponent P = constant2(2);
    const DensityChange r =
        density_change(P, WeightedVector::dense({1.0, 1.0}), {2.0, 1.0});
    CHECK(r.nu_modular == 5.0);  // weights (4, 1) applied to 1^2
    CHECK(r.mu_modular == 5.0);  // |2|^2 + |1|^2
    CHECK(r.agree);
    CHECK_FALSE(r.inf_rescaled);
  }
  SUBCASE("identity multiplier") {
    SplitMix64 rng(42);
    const VarExponent P({{Exponent(1.5), 0.7}, {Exponent(3.0), 1.2}});
    const WeightedVector f = WeightedVector::dense(
        {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)});
    const DensityChange r = density_change(P, f, {1.0, 1.0});
    CHECK(r.nu_modular == r.mu_modular);
    CHECK(r.lux_f_nu == doctest::Approx(r.lux_fh_mu).epsilon(1e-12));
    CHECK(r.agree);
  }
  SUBCASE("infinite atoms rescale the sup norm by h") {
    const VarExponent Pinf({{Exponent::infinity(), 1.0}});
    const DensityChange r =
        density_change(Pinf, WeightedVector::dense({2.0}), {0.5});
    CHECK(r.lux_f_nu == 2.0);
    CHECK(r.lux_fh_mu == 1.0);
    CHECK(r.inf_rescaled);
    CHECK(r.agree);  // compared as ||f h|| = h ||f||
  }
  SUBCASE("zero multiplier entry rejected") {
    CHECK_THROWS_AS(
        density_change(constant2(1), WeightedVector::dense({1.0}), {0.0}),
        std::invalid_argument);
  }
  SUBCASE("random finite cases agree") {
    SplitMix64 root(4004);
    for (int k = 0; k < 100; ++k) {
      SplitMix64 rng = case_rng(root.next(), k);
      const std::size_t n = 1 + rng.uniform_int(0, 4);
      std::vector<ExponentAtom> atoms;
      std::vector<WeightedVector::Entry> es;
      std::vector<double> h;
      for (std::size_t i = 0; i < n; ++i) {
        atoms.push_back({Exponent(rng.log_uniform(0.5, 6.0)), rng.uniform(0.2, 2.0)});
        es.push_back({i, rng.uniform(-1.5, 1.5)});
        h.push_back(rng.log_uniform(0.25, 4.0));
      }
      const DensityChange r = density_change(VarExponent(std::move(atoms)),
                                             WeightedVector(std::move(es)), h);
      CHECK(std::abs(r.nu_modular - r.mu_modular) <= 1e-12);
      CHECK(r.agree);
    }
  }
}

TEST_CASE("homogeneity and monotonicity of the gauge") {
  SplitMix64 root(600);
  for (int k = 0; k < 200; ++k) {
    SplitMix64 rng = case_rng(root.next(), k);
    const std::size_t n = 1 + rng.uniform_int(0, 5);
    std::vector<ExponentAtom> atoms;
    for (std::size_t i = 0; i < n; ++i) {
      const bool inf = rng.uniform01() < 0.15;
      atoms.push_back({inf ? Exponent::infinity()
                           : Exponent(rng.log_uniform(0.5, 8.0)),
                       rng.uniform(0.2, 2.0)});
    }
    const VarExponent P(std::move(atoms));
    std::vector<WeightedVector::Entry> es;
    for (std::size_t i = 0; i < n; ++i) es.push_back({i, rng.uniform(-2.0, 2.0)});
    const WeightedVector f(std::move(es));
    if (f.is_zero()) continue;

    const double c = rng.log_uniform(1e-2, 1e2);
    const double lhs = luxemburg(P, f.scaled(c), ModularKind::phi);
    const double rhs = c * luxemburg(P, f, ModularKind::phi);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, rhs));

    std::vector<WeightedVector::Entry> ge;
    for (const auto& e : f.entries())
      ge.push_back({e.i, e.v * rng.uniform01()});
    const WeightedVector g(std::move(ge));
    CHECK(luxemburg(P, g, ModularKind::phi) <=
          luxemburg(P, f, ModularKind::phi) + 1e-12);
  }
}

TEST_CASE("unit ball consistency for finite exponents") {
  SplitMix64 root(1234);
  for (int k = 0; k < 200; ++k) {
    SplitMix64 rng = case_rng(root.next(), k);
    const std::size_t n = 1 + rng.uniform_int(0, 5);
    std::vector<ExponentAtom> atoms;
    std::vector<WeightedVector::Entry> es;
    for (std::size_t i = 0; i < n; ++i) {
      atoms.push_back({Exponent(rng.log_uniform(0.5, 8.0)), rng.uniform(0.2, 2.0)});
      es.push_back({i, rng.uniform(0.1, 2.0)});
    }
    const VarExponent P(std::move(atoms));
    WeightedVector f(std::move(es));
    f = f.scaled(rng.uniform01() / luxemburg(P, f, ModularKind::phi));
    CHECK(modular_phi(P, f).value.value() <= 1.0 + 1e-9);
  }
}

TEST_CASE("weighted vector validation") {
  CHECK_THROWS_AS(WeightedVector({{0, 1.0}, {0, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(WeightedVector({{0, std::nan("")}}), std::invalid_argument);
  const VarExponent P = constant2(1);
  CHECK_THROWS_AS(modular_phi(P, WeightedVector({{5, 1.0}})),
                  std::invalid_argument);
}
