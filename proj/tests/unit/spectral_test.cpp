#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hyperrho/error.hpp"
#include "hyperrho/extremal.hpp"
#include "hyperrho/families.hpp"
#include "hyperrho/spectral.hpp"
#include "oracles.hpp"

using namespace hyperrho;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no hyperrho::Error thrown";
  return Errc::InvalidParams;
}

std::vector<double> random_k_unit(int n, int k, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(static_cast<std::size_t>(n));
  double s = 0;
  for (auto& v : x) {
    v = u(rng);
    s += std::pow(v, k);
  }
  for (auto& v : x) v /= std::pow(s, 1.0 / k);
  return x;
}

}  // namespace

TEST(Alpha, Range) {
  EXPECT_NO_THROW(Alpha(0.0));
  EXPECT_NO_THROW(Alpha(0.999));
  EXPECT_EQ(code_of([] { Alpha(1.0); }), Errc::InvalidAlpha);
  EXPECT_EQ(code_of([] { Alpha(-0.1); }), Errc::InvalidAlpha);
  EXPECT_EQ(code_of([] { Alpha(std::nan("")); }), Errc::InvalidAlpha);
}

TEST(Spectral, StarMatchesScalarEquation) {
  for (int k = 2; k <= 4; ++k) {
    for (int m = 1; m <= 6; ++m) {
      for (double a : {0.0, 0.25, 0.5, 0.75, 0.9}) {
        const auto r = spectral_radius(families::hyperstar(m, k), Alpha(a));
        EXPECT_NEAR(r.rho, oracle::star_rho(m, k, a), 1e-9) << "m=" << m << " k=" << k << " a=" << a;
      }
    }
  }
  EXPECT_NEAR(oracle::star_rho(4, 3, 0.5), 2.1776507, 1e-7);
}

TEST(Spectral, LoosePathClosedForm) {
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  EXPECT_NEAR(spectral_radius(families::loose_path(3, 3), Alpha(0.0)).rho, std::pow(golden, 2.0 / 3.0), 1e-9);
}

TEST(Spectral, RegularInstancesHaveRhoEqualDegree) {
  const std::vector<std::pair<UniformHypergraph, int>> cases{
      {families::hyperstar(1, 3), 1},
      {UniformHypergraph::build(2, 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 2},
      {UniformHypergraph::build(3, 5, {{0, 1, 2}, {0, 3, 4}, {1, 2, 3}, {0, 1, 4}, {2, 3, 4}}), 3},
  };
  for (const auto& [g, d] : cases) {
    ASSERT_TRUE(is_regular(g));
    for (double a : {0.0, 0.25, 0.5, 0.75}) {
      const auto r = spectral_radius(g, Alpha(a));
      EXPECT_NEAR(r.rho, d, 1e-10);
      for (double x : r.perron) EXPECT_NEAR(x, std::pow(1.0 / g.n(), 1.0 / g.k()), 1e-9);
    }
  }
}

TEST(Spectral, AgreesWithNaiveIteration) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_connected(1 + static_cast<int>(seed % 7), 2 + static_cast<int>(seed % 3), seed);
    for (double a : {0.0, 0.3, 0.8}) {
      EXPECT_NEAR(spectral_radius(g, Alpha(a)).rho, oracle::naive_rho(g, a), 1e-9) << serialize_uhg(g);
    }
  }
}

TEST(Spectral, ResultHygiene) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_connected(1 + static_cast<int>(seed % 8), 2 + static_cast<int>(seed % 3), seed + 9);
    const Alpha a(0.25 * static_cast<double>(seed % 4));
    const auto r = spectral_radius(g, a);
    EXPECT_LE(r.residual_inf, 1e-10);
    EXPECT_LE(eigen_residual(g, a, r.rho, r.perron), 1e-10);
    double s = 0;
    for (double x : r.perron) {
      EXPECT_GT(x, 0.0);
      s += std::pow(x, g.k());
    }
    EXPECT_NEAR(s, 1.0, 1e-12);
    EXPECT_LE(r.bracket_lo, r.rho);
    EXPECT_GE(r.bracket_hi, r.rho);
    EXPECT_NEAR(rayleigh(g, a, r.perron), r.rho, 1e-10);
  }
}

TEST(Rayleigh, FormsAgreeAndAreBoundedByRho) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + trial % 3;
    auto g = random_connected(1 + trial % 6, k, static_cast<std::uint64_t>(trial));
    const Alpha a(0.1 * (trial % 10));
    const auto x = random_k_unit(g.n(), k, rng);
    const auto f = rayleigh_forms(g, a, x);
    EXPECT_NEAR(f.by_vertex, f.by_edge, 1e-12 * std::max(1.0, std::abs(f.by_vertex)));
    EXPECT_LE(rayleigh(g, a, x), spectral_radius(g, a).rho + 1e-10);
  }
}

TEST(Rayleigh, ApplyMatchesEigenequation) {
  auto g = families::loose_path(2, 3);  // {0,1,2}, {2,3,4}
  const std::vector<double> x{1, 2, 3, 4, 5};
  const auto y = alpha_apply(g, Alpha(0.5), x);
  EXPECT_DOUBLE_EQ(y[0], 0.5 * 1 * 1 + 0.5 * 6);
  EXPECT_DOUBLE_EQ(y[2], 0.5 * 2 * 9 + 0.5 * (2 + 20));
  EXPECT_DOUBLE_EQ(y[4], 0.5 * 25 + 0.5 * 12);
}

TEST(Spectral, EdgeAdditionIncreasesRho) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_connected(3 + static_cast<int>(seed % 4), 3, seed);
    auto edges = g.edge_list();
    std::vector<Vertex> extra{0, 1, g.n()};
    edges.push_back(extra);
    if (g.has_edge({0, 1, g.n()})) continue;
    auto h = UniformHypergraph::build(3, g.n() + 1, edges);
    for (double a : {0.0, 0.5}) {
      EXPECT_GT(spectral_radius(h, Alpha(a)).rho, spectral_radius(g, Alpha(a)).rho + 1e-9);
    }
  }
}

TEST(Spectral, RelabelInvariance) {
  auto g = families::broom_S(6, 4, 3);
  std::vector<Vertex> perm(static_cast<std::size_t>(g.n()));
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  auto h = relabel(g, perm);
  const auto rg = spectral_radius(g, Alpha(0.4));
  const auto rh = spectral_radius(h, Alpha(0.4));
  EXPECT_NEAR(rg.rho, rh.rho, 1e-11);
  for (Vertex v = 0; v < g.n(); ++v) EXPECT_NEAR(rg.perron[v], rh.perron[perm[v]], 1e-9);
}

TEST(Spectral, Errors) {
  auto disconnected = UniformHypergraph::build(2, 4, {{0, 1}, {2, 3}});
  EXPECT_EQ(code_of([&] { spectral_radius(disconnected, Alpha(0)); }), Errc::Disconnected);
  SpectralOptions tight;
  tight.max_iter = 1;
  EXPECT_EQ(code_of([&] { spectral_radius(families::loose_path(4, 3), Alpha(0.5), tight); }), Errc::NoConvergence);
  SpectralOptions bad;
  bad.tol = 0;
  EXPECT_EQ(code_of([&] { spectral_radius(families::loose_path(4, 3), Alpha(0.5), bad); }), Errc::InvalidParams);

  auto g = families::loose_path(2, 3);
  EXPECT_EQ(code_of([&] { alpha_apply(g, Alpha(0), std::vector<double>{1, 2}); }), Errc::DimensionMismatch);
  EXPECT_EQ(code_of([&] { alpha_apply(g, Alpha(0), std::vector<double>{1, -2, 1, 1, 1}); }), Errc::NegativeEntry);
  EXPECT_EQ(code_of([&] { rayleigh(g, Alpha(0), std::vector<double>{1, 1, 1, 1, 1}); }), Errc::NotKUnit);
}

TEST(Spectral, ComponentsOfDisconnectedInput) {
  auto g = UniformHypergraph::build(3, 10, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {7, 8, 9}});
  auto with_isolated = UniformHypergraph::build(3, 11, g.edge_list());
  const auto parts = component_spectra(with_isolated, Alpha(0));
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_NEAR(parts[0].result.rho, std::cbrt(3.0), 1e-10);
  EXPECT_NEAR(parts[1].result.rho, 1.0, 1e-10);
  EXPECT_EQ(parts[2].result.rho, 0.0);
  EXPECT_EQ(parts[2].result.perron, std::vector<double>{1.0});
  EXPECT_NEAR(spectral_radius_any(with_isolated, Alpha(0)), std::cbrt(3.0), 1e-10);
}
