#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "vexp/rng.hpp"
#include "vexp/sequences.hpp"

using namespace vexp;

TEST_CASE("cantor pairing is a bijection with increasing rows") {
  for (std::size_t n = 0; n < 2000; ++n) {
    const auto [x, y] = cantor_unpair(n);
    CHECK(cantor_pair(x, y) == n);
  }
  for (std::size_t k = 0; k < 20; ++k)
    for (std::size_t j = 1; j < 20; ++j)
      CHECK(cantor_pair(k, j) > cantor_pair(k, j - 1));
}

TEST_CASE("block family validation") {
  const VarExponent P = VarExponent::constant(Exponent(2.0), 4);
  std::vector<WeightedVector> overlapping = {
      WeightedVector({{0, 1.0}, {1, 1.0}}), WeightedVector({{1, 1.0}})};
  CHECK_THROWS_AS(BlockFamily(P, overlapping), std::invalid_argument);
  std::vector<WeightedVector> with_zero = {WeightedVector({{0, 0.0}})};
  CHECK_THROWS_AS(BlockFamily(P, with_zero), std::invalid_argument);
}

TEST_CASE("induced function of a unit vector is the power form") {
  const VarExponent P({{Exponent(2.0), 1.0}});
  const BlockFamily X(P, {WeightedVector::unit(0)});
  const Grid grid = Grid::log_spaced(1e-4, 1.0, 64);
  const InducedOrlicz ind = induced_orlicz(X, grid);
  CHECK(ind.b == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(ind.F_psi[0][i] ==
          doctest::Approx(grid[i] * grid[i] / 2.0).epsilon(1e-12));
    CHECK(ind.F_phi[0][i] ==
          doctest::Approx(grid[i] * grid[i]).epsilon(1e-12));
  }
  CHECK(ind.c[0] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("scaling a block scales the induced argument") {
  const VarExponent P({{Exponent(2.0), 1.0}});
  const BlockFamily X(P, {WeightedVector({{0, 2.0}})});
  const Grid grid = Grid::log_spaced(1e-4, 0.5, 32);
  const InducedOrlicz ind = induced_orlicz(X, grid);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(ind.F_psi[0][i] ==
          doctest::Approx(2.0 * grid[i] * grid[i]).epsilon(1e-12));
}

TEST_CASE("F_n(t) = G_n(t b) on the finite part") {
  SplitMix64 root(88);
  for (int k = 0; k < 30; ++k) {
    SplitMix64 rng = case_rng(root.next(), k);
    const std::size_t nblocks = 1 + rng.uniform_int(0, 2);
    const std::size_t per = 1 + rng.uniform_int(0, 2);
    std::vector<ExponentAtom> atoms;
    for (std::size_t i = 0; i < nblocks * per; ++i)
      atoms.push_back(
          {Exponent(rng.log_uniform(0.6, 6.0)), rng.uniform(0.3, 1.5)});
    const VarExponent P(std::move(atoms));
    std::vector<WeightedVector> xs;
    for (std::size_t b = 0; b < nblocks; ++b) {
      std::vector<WeightedVector::Entry> es;
      for (std::size_t j = 0; j < per; ++j)
        es.push_back({b * per + j, rng.uniform(0.2, 1.5)});
      xs.push_back(WeightedVector(std::move(es)));
    }
    const Grid grid = Grid::log_spaced(1e-5, 1.0, 48);
    const InducedOrlicz ind = induced_orlicz(BlockFamily(P, xs), grid);
    // At grid points t with t <= 1/b, F_n(t) equals G_n(t b) by construction;
    // check against a direct evaluation of G at t*b.
    for (std::size_t n = 0; n < xs.size(); ++n) {
      for (std::size_t i = 0; i < grid.size(); i += 7) {
        const double t = grid[i];
        if (t > 1.0 / ind.b) continue;
        double g_tb = 0.0;
        for (const auto& e : xs[n].entries()) {
          const auto& a = P.atom(e.i);
          const double p = a.p.finite_value();
          g_tb += a.w * (std::pow(t * ind.b, p) / p) *
                  std::pow(std::abs(e.v) / ind.b, p);
        }
        CHECK(ind.F_psi[n][i] ==
              doctest::Approx(g_tb).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("sigma block basis") {
  // q_j = 1 + 1/j truncated at J = 20 with a_j^{q_j} = 2^{-j} normalized.
  std::vector<double> q, a;
  const std::size_t J = 20;
  const double norm = 1.0 - std::pow(2.0, -static_cast<double>(J));
  for (std::size_t j = 1; j <= J; ++j) {
    q.push_back(1.0 + 1.0 / static_cast<double>(j));
    const double target = std::pow(2.0, -static_cast<double>(j)) / norm;
    a.push_back(std::pow(target, 1.0 / q.back()));
  }
  const std::size_t K = 4;
  const BlockBasis bb = block_basis(q, a, K);

  SUBCASE("modular functions are identical across blocks, exactly") {
    const Grid grid = Grid::log_spaced(1e-6, 1.0, 128);
    for (double t : grid.pts) {
      const double m0 =
          modular_phi(bb.family.exponent, bb.family.blocks[0].scaled(t))
              .value.value();
      for (std::size_t k = 1; k < K; ++k) {
        const double mk =
            modular_phi(bb.family.exponent, bb.family.blocks[k].scaled(t))
                .value.value();
        CHECK(mk == m0);
      }
      CHECK(m0 == bb.F(t));
    }
  }
  SUBCASE("normalization holds") {
    CHECK(bb.F(1.0) == doctest::Approx(1.0).epsilon(1e-10));
  }
  SUBCASE("decay diagnostic of the induced function") {
    const double qmin = q.back();
    double prev = std::numeric_limits<double>::infinity();
    for (double t : {1e-2, 1e-4, 1e-6}) {
      const double ratio = bb.F(t) / std::pow(t, qmin);
      CHECK(ratio < prev);
      prev = ratio;
    }
  }
}

TEST_CASE("block basis induced functions agree across blocks on the grid") {
  const BlockBasis bb = block_basis({2.0, 1.5, 1.25},
                                    {0.5, 0.4, 0.3}, 3, /*auto_scale=*/true);
  const Grid grid = Grid::log_spaced(1e-5, 1.0, 64);
  const InducedOrlicz ind = induced_orlicz(bb.family, grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    for (std::size_t k = 1; k < 3; ++k) {
      CHECK(ind.F_phi[k][i] == ind.F_phi[0][i]);
      CHECK(ind.F_psi[k][i] == ind.F_psi[0][i]);
    }
    CHECK(ind.F_phi[0][i] == doctest::Approx(bb.F(grid[i])).epsilon(1e-12));
  }
}

TEST_CASE("convergent exponents induce a single power function") {
  // Unit-vector blocks along a tail p_n -> p: the induced functions are
  // psi_{p_n}, their sup-distance to psi_p is |1/p_n - 1/p| (summable along
  // the chosen subsequence), and the inclusion check accepts both directions
  // against the constant-p family; l_P along the tail behaves like l_p.
  const double p = 2.0;
  const std::size_t N = 8;
  std::vector<ExponentAtom> atoms;
  for (std::size_t n = 0; n < N; ++n) {
    const double pn = p + 1.0 / std::pow(2.0, static_cast<double>(n));
    atoms.push_back({Exponent(pn), 1.0});
  }
  const VarExponent P(std::move(atoms), TailSpec::convergent(Exponent(p)));
  REQUIRE(limit_points(P) == std::vector<Exponent>{Exponent(p)});

  std::vector<WeightedVector> xs;
  for (std::size_t n = 0; n < N; ++n) xs.push_back(WeightedVector::unit(n));
  const Grid grid = Grid::log_spaced(1e-8, 1.0, 256);
  const InducedOrlicz ind = induced_orlicz(BlockFamily(P, xs), grid);

  double dist_sum = 0.0;
  for (std::size_t n = 0; n < N; ++n) {
    double dist = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
      dist = std::max(dist, std::abs(ind.F_psi[n][i] -
                                     psi_pow(grid[i], Exponent(p)).value()));
    const double pn = P.atom(n).p.finite_value();
    CHECK(dist == doctest::Approx(1.0 / p - 1.0 / pn).epsilon(1e-9));
    dist_sum += dist;
  }
  CHECK(dist_sum < 0.5);  // geometric, summable tail

  std::vector<std::vector<double>> target(
      N, [&] {
        std::vector<double> y;
        for (double t : grid.pts) y.push_back(psi_pow(t, Exponent(p)).value());
        return y;
      }());
  EmbedSearch search;
  search.a_budget = 0.5;
  const EmbedVerdict fwd = musielak_embed_check(grid, ind.F_psi, target, search);
  const EmbedVerdict bwd = musielak_embed_check(grid, target, ind.F_psi, search);
  CHECK(fwd.kind == VerdictKind::WitnessFound);
  CHECK(bwd.kind == VerdictKind::WitnessFound);
}

TEST_CASE("degenerate block bases") {
  SUBCASE("single term is a unit vector family") {
    const BlockBasis bb = block_basis({2.0}, {1.0}, 3);
    const Grid grid = Grid::log_spaced(1e-3, 1.0, 16);
    for (double t : grid.pts)
      CHECK(bb.F(t) == doctest::Approx(t * t).epsilon(1e-14));
  }
  SUBCASE("constant q recovers l_q") {
    // Three equal exponents, a_j^q = 1/3 each.
    const double q = 1.7;
    const double aj = std::pow(1.0 / 3.0, 1.0 / q);
    const BlockBasis bb = block_basis({q, q, q}, {aj, aj, aj}, 2);
    for (double t : {0.1, 0.5, 1.0})
      CHECK(bb.F(t) == doctest::Approx(std::pow(t, q)).epsilon(1e-12));
  }
  SUBCASE("normalization is enforced unless auto-scaling is requested") {
    CHECK_THROWS_AS(block_basis({2.0}, {0.9}, 1), std::invalid_argument);
    const BlockBasis bb = block_basis({2.0}, {0.9}, 1, /*auto_scale=*/true);
    CHECK(bb.F(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("musielak embedding checker") {
  const Grid grid = Grid::log_spaced(1e-8, 1.0, 256);
  auto sample_psi = [&](double p) {
    std::vector<double> y;
    for (double t : grid.pts) y.push_back(std::pow(t, p) / p);
    return y;
  };
  const std::size_t N = 6;

  SUBCASE("identity family accepts with b = C = 1") {
    std::vector<std::vector<double>> F(N, sample_psi(2.0));
    const EmbedVerdict v = musielak_embed_check(grid, F, F, EmbedSearch{});
    CHECK(v.kind == VerdictKind::WitnessFound);
    CHECK(v.b == 1.0);
    CHECK(v.C == 1.0);
    for (double an : v.a) CHECK(an == 0.0);
  }
  SUBCASE("l_1 into l_2: t^2/2 <= t on [0, 1]") {
    std::vector<std::vector<double>> F(N, sample_psi(1.0));
    std::vector<std::vector<double>> G(N, sample_psi(2.0));
    const EmbedVerdict v = musielak_embed_check(grid, F, G, EmbedSearch{});
    CHECK(v.kind == VerdictKind::WitnessFound);
    CHECK(v.b == 1.0);
    CHECK(v.C == 1.0);
    for (double an : v.a) CHECK(an == 0.0);
  }
  SUBCASE("l_2 into l_1 is rejected") {
    std::vector<std::vector<double>> F(N, sample_psi(2.0));
    std::vector<std::vector<double>> G(N, sample_psi(1.0));
    const EmbedVerdict v = musielak_embed_check(grid, F, G, EmbedSearch{});
    CHECK(v.kind == VerdictKind::ViolationFound);
  }
  SUBCASE("mismatched families rejected") {
    std::vector<std::vector<double>> F(N, sample_psi(2.0));
    std::vector<std::vector<double>> G(N - 1, sample_psi(2.0));
    CHECK_THROWS_AS(musielak_embed_check(grid, F, G, EmbedSearch{}),
                    std::invalid_argument);
  }
}

TEST_CASE("dichotomy normalization") {
  const VarExponent P({{Exponent(2.0), 1.0},
                       {Exponent(2.0), 1.0},
                       {Exponent(2.0), 1.0}});
  const Grid grid = Grid::log_spaced(1e-4, 1.0, 32);

  SUBCASE("equal blocks normalize to identical functions") {
    const BlockFamily X(P, {WeightedVector({{0, 1.0}}),
                            WeightedVector({{1, 1.0}}),
                            WeightedVector({{2, 1.0}})});
    const InducedOrlicz ind = induced_orlicz(X, grid);
    const DichotomyResult d = dichotomy_normalize(ind, 1e-6);
    CHECK(d.label == DichotomyLabel::AllAbove);
    CHECK(d.above.size() == 3);
    CHECK(d.max_consecutive_distance == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("mixed case partitions the indices") {
    InducedOrlicz ind;
    ind.grid = grid;
    ind.c = {0.5, 0.5, 1e-9};
    ind.G.assign(3, std::vector<double>(grid.size(), 0.0));
    for (std::size_t i = 0; i < grid.size(); ++i) {
      ind.G[0][i] = grid[i];
      ind.G[1][i] = grid[i];
      ind.G[2][i] = 1e-9 * grid[i];
    }
    const DichotomyResult d = dichotomy_normalize(ind, 0.1);
    CHECK(d.label == DichotomyLabel::Mixed);
    REQUIRE(d.above.size() == 2);
    REQUIRE(d.below.size() == 1);
    CHECK(d.below[0] == 2);
    CHECK(d.below_sum == doctest::Approx(1e-9));
  }
  SUBCASE("summable case") {
    InducedOrlicz ind;
    ind.grid = grid;
    ind.c = {0.5, 0.25, 0.125};
    for (double cn : ind.c) {
      std::vector<double> g;
      for (double t : grid.pts) g.push_back(cn * t);
      ind.G.push_back(std::move(g));
    }
    const DichotomyResult d = dichotomy_normalize(ind, 0.9);
    CHECK(d.label == DichotomyLabel::AllBelow);
    CHECK(d.below_sum == doctest::Approx(0.875));
  }
}

TEST_CASE("decreasing blocks against growing exponent tails") {
  // Blocks whose finite-exponent mass shrinks produce the summable branch.
  std::vector<ExponentAtom> atoms;
  for (std::size_t i = 0; i < 4; ++i) {
    atoms.push_back({Exponent(2.0), 1.0});
    atoms.push_back({Exponent::infinity(), 1.0});
  }
  const VarExponent P(std::move(atoms));
  std::vector<WeightedVector> xs;
  for (std::size_t b = 0; b < 4; ++b) {
    const double small = std::pow(2.0, -static_cast<double>(b + 2));
    // Norm carried by the infinite atom (value 1), a vanishing finite part.
    xs.push_back(WeightedVector({{2 * b, small}, {2 * b + 1, 1.0}}));
  }
  const Grid grid = Grid::log_spaced(1e-4, 1.0, 32);
  const InducedOrlicz ind = induced_orlicz(BlockFamily(P, xs), grid);
  CHECK(ind.b == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t n = 1; n < 4; ++n) CHECK(ind.c[n] < ind.c[n - 1]);
  const DichotomyResult d = dichotomy_normalize(ind, 0.05);
  CHECK(d.below.size() >= 1);
}
