#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "flowplate/ambient.hpp"
#include "flowplate/diffops.hpp"

using namespace flowplate;

namespace {
const BoxDomain kUnit{1.0, 1.0, 1.0};
}

TEST_CASE("zero amplitude collapses both families") {
  auto ch = make_channel_flow(kUnit, 0.0);
  auto sw = make_swirl_flow(kUnit, 0.0);
  Grid g = build_grid(kUnit, 9, 9, 9);
  CHECK(div_sup(ch, g) == 0.0);
  CHECK(div_sup(sw, g) == 0.0);
  auto v = ch.value(0.3, 0.4, -0.5);
  CHECK(v[0] == 0.0);
}

TEST_CASE("channel flow divergence supremum") {
  auto ch = make_channel_flow(kUnit, 1.0);
  CHECK(ch.analytic_div_sup == Catch::Approx(M_PI));
  Grid g = build_grid(kUnit, 65, 9, 9);
  CHECK(div_sup(ch, g) == Catch::Approx(M_PI).margin(0.002));
}

TEST_CASE("normal trace vanishes on the boundary for both families") {
  Grid g = build_grid(kUnit, 11, 9, 9);
  auto ch = make_channel_flow(kUnit, 1.0);
  auto sw = make_swirl_flow(kUnit, 0.7);
  CHECK(max_boundary_normal_trace(ch, g) <= 1e-13);
  CHECK(max_boundary_normal_trace(sw, g) <= 1e-13);
}

TEST_CASE("swirl is divergence free at random interior points") {
  auto sw = make_swirl_flow(kUnit, 1.3);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> un(0.05, 0.95);
  // Two-sided check: the closed form says 0; a centered difference of the
  // closed-form U must agree.
  for (int t = 0; t < 100; ++t) {
    double x = un(rng), y = un(rng), z = -un(rng);
    CHECK(sw.divergence(x, y, z) == 0.0);
    const double h = 1e-5;
    double fd = (sw.value(x + h, y, z)[0] - sw.value(x - h, y, z)[0]) / (2 * h) +
                (sw.value(x, y + h, z)[1] - sw.value(x, y - h, z)[1]) / (2 * h) +
                (sw.value(x, y, z + h)[2] - sw.value(x, y, z - h)[2]) / (2 * h);
    CHECK(std::abs(fd) <= 1e-9);
  }
}

TEST_CASE("analytic jacobian matches centered differences") {
  auto flows = {make_channel_flow(kUnit, 0.8), make_swirl_flow(kUnit, 1.1)};
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> un(0.1, 0.9);
  for (const auto& U : flows) {
    for (int t = 0; t < 40; ++t) {
      double x = un(rng), y = un(rng), z = -un(rng);
      Eigen::Matrix3d J = U.jacobian(x, y, z);
      const double h = 1e-5;
      for (int i = 0; i < 3; ++i) {
        double fdx = (U.value(x + h, y, z)[i] - U.value(x - h, y, z)[i]) / (2 * h);
        double fdy = (U.value(x, y + h, z)[i] - U.value(x, y - h, z)[i]) / (2 * h);
        double fdz = (U.value(x, y, z + h)[i] - U.value(x, y, z - h)[i]) / (2 * h);
        CHECK(J(i, 0) == Catch::Approx(fdx).margin(1e-8));
        CHECK(J(i, 1) == Catch::Approx(fdy).margin(1e-8));
        CHECK(J(i, 2) == Catch::Approx(fdz).margin(1e-8));
      }
    }
  }
}

TEST_CASE("omega restriction is consistent with the 3-D evaluators") {
  auto sw = make_swirl_flow(kUnit, 0.9);
  auto ch = make_channel_flow(kUnit, 1.2);
  for (const auto& U : {sw, ch}) {
    for (double x : {0.1, 0.45, 0.8})
      for (double y : {0.2, 0.5, 0.95}) {
        auto v3 = U.value(x, y, 0.0);
        auto v2 = U.omega_value(x, y);
        CHECK(v2[0] == Catch::Approx(v3[0]).margin(1e-14));
        CHECK(v2[1] == Catch::Approx(v3[1]).margin(1e-14));
        CHECK(v3[2] == 0.0);
        auto d = U.omega_derivs(x, y);
        Eigen::Matrix3d J = U.jacobian(x, y, 0.0);
        CHECK(d.d1u1 == Catch::Approx(J(0, 0)).margin(1e-14));
        CHECK(d.d2u1 == Catch::Approx(J(0, 1)).margin(1e-14));
        CHECK(d.d1u2 == Catch::Approx(J(1, 0)).margin(1e-14));
        CHECK(d.d2u2 == Catch::Approx(J(1, 1)).margin(1e-14));
      }
  }
}

TEST_CASE("omega second derivatives match differences of the first") {
  auto sw = make_swirl_flow(kUnit, 1.0);
  const double h = 1e-5;
  for (double x : {0.3, 0.6})
    for (double y : {0.25, 0.7}) {
      auto d = sw.omega_derivs(x, y);
      auto dxp = sw.omega_derivs(x + h, y), dxm = sw.omega_derivs(x - h, y);
      auto dyp = sw.omega_derivs(x, y + h), dym = sw.omega_derivs(x, y - h);
      CHECK(d.d11u1 == Catch::Approx((dxp.d1u1 - dxm.d1u1) / (2 * h)).margin(1e-7));
      CHECK(d.d12u1 == Catch::Approx((dyp.d1u1 - dym.d1u1) / (2 * h)).margin(1e-7));
      CHECK(d.d22u1 == Catch::Approx((dyp.d2u1 - dym.d2u1) / (2 * h)).margin(1e-7));
      CHECK(d.d11u2 == Catch::Approx((dxp.d1u2 - dxm.d1u2) / (2 * h)).margin(1e-7));
      CHECK(d.d12u2 == Catch::Approx((dxp.d2u2 - dxm.d2u2) / (2 * h)).margin(1e-7));
      CHECK(d.d22u2 == Catch::Approx((dyp.d2u2 - dym.d2u2) / (2 * h)).margin(1e-7));
    }
}

TEST_CASE("div_sup reports the grid max alongside the analytic value") {
  Grid g = build_grid(kUnit, 9, 9, 9);
  auto ch = make_channel_flow(kUnit, 2.0);
  double grid_max = div_sup(ch, g);
  CHECK(grid_max <= ch.analytic_div_sup + 1e-12);
  CHECK(grid_max == Catch::Approx(2.0 * M_PI));  // attained at x = 0
  CHECK(div_sup(make_zero_flow(), g) == 0.0);
}

TEST_CASE("unknown family is a config error") {
  CHECK_THROWS_AS(make_ambient("vortex", kUnit, 1.0), ConfigError);
  CHECK(make_ambient("channel", kUnit, 1.0).family == AmbientFamily::Channel);
}
