#include <catch2/catch_amalgamated.hpp>

#include "flowplate/fields.hpp"
#include "flowplate/grid.hpp"

using namespace flowplate;

TEST_CASE("unit cube grid spacing and node count") {
  Grid g = build_grid({1.0, 1.0, 1.0}, 9, 9, 9);
  CHECK(g.hx() == Catch::Approx(1.0 / 8));
  CHECK(g.hy() == Catch::Approx(1.0 / 8));
  CHECK(g.hz() == Catch::Approx(1.0 / 8));
  CHECK(g.num_nodes() == 729);
}

TEST_CASE("node index map is a bijection with lexicographic order") {
  Grid g = build_grid({2.0, 1.0, 1.5}, 5, 6, 7);
  std::vector<bool> seen(g.num_nodes(), false);
  int prev = -1;
  for (int i = 0; i < g.nx(); ++i)
    for (int j = 0; j < g.ny(); ++j)
      for (int k = 0; k < g.nz(); ++k) {
        int idx = g.index(i, j, k);
        REQUIRE(idx >= 0);
        REQUIRE(idx < g.num_nodes());
        REQUIRE_FALSE(seen[idx]);
        seen[idx] = true;
        CHECK(idx == prev + 1);  // (x,y,z)-lexicographic enumeration
        prev = idx;
        auto c = g.coords_of(idx);
        CHECK(c[0] == i);
        CHECK(c[1] == j);
        CHECK(c[2] == k);
      }
}

TEST_CASE("resolution below stencil width names the axis") {
  CHECK_THROWS_WITH(build_grid({1, 1, 1}, 4, 9, 9),
                    Catch::Matchers::ContainsSubstring("'x'"));
  CHECK_THROWS_WITH(build_grid({1, 1, 1}, 9, 9, 3),
                    Catch::Matchers::ContainsSubstring("'z'"));
  CHECK_THROWS_AS(build_grid({0.0, 1, 1}, 9, 9, 9), ConfigError);
}

TEST_CASE("volume quadrature exact on constants") {
  Grid g = build_grid({1.0, 1.0, 1.0}, 9, 9, 9);
  Vec one = Vec::Ones(g.num_nodes());
  CHECK(g.integrate_volume(one) == Catch::Approx(1.0).margin(1e-14));

  Grid g2 = build_grid({2.0, 0.5, 3.0}, 7, 9, 11);
  Vec one2 = Vec::Ones(g2.num_nodes());
  CHECK(g2.integrate_volume(one2) == Catch::Approx(2.0 * 0.5 * 3.0).margin(1e-12));
}

TEST_CASE("surface quadrature over Omega is trapezoid-exact on linears") {
  Grid g = build_grid({1.0, 1.0, 1.0}, 9, 9, 9);
  Vec f(g.num_top_nodes());
  for (int i = 0; i < g.nx(); ++i)
    for (int j = 0; j < g.ny(); ++j) f[g.top_index(i, j)] = g.x(i);
  CHECK(g.integrate_top(f) == Catch::Approx(0.5).margin(1e-14));
  Vec one = Vec::Ones(g.num_top_nodes());
  CHECK(g.integrate_top(one) == Catch::Approx(1.0).margin(1e-14));
  // Interior-node quadrature weights sum to the area as well in the limit of
  // the full trapezoid rule restricted to clamped integrands.
  CHECK(g.omega_weights().sum() == Catch::Approx((7.0 / 8) * (7.0 / 8)).margin(1e-14));
}

TEST_CASE("boundary classification counts and tags") {
  Grid g = build_grid({1.0, 1.0, 1.0}, 9, 9, 9);
  int omega = 0, sface = 0, edge = 0, corner = 0;
  for (int idx : g.boundary_nodes()) {
    switch (g.boundary(idx).tag) {
      case BoundaryTag::OmegaFace: ++omega; break;
      case BoundaryTag::SFace: ++sface; break;
      case BoundaryTag::Edge: ++edge; break;
      case BoundaryTag::Corner: ++corner; break;
      default: FAIL("interior node tagged as boundary");
    }
  }
  CHECK(omega == 49);
  CHECK(sface == 5 * 49);
  CHECK(corner == 8);
  CHECK(edge == 12 * 7);
  CHECK(omega + sface + edge + corner ==
        static_cast<int>(g.boundary_nodes().size()));

  const NodeBoundary& c0 = g.boundary(g.index(0, 0, 0));
  CHECK(c0.tag == BoundaryTag::Corner);

  // Mid-left rim node of the top face carries nu = [-1, 0].
  const NodeBoundary& rim = g.boundary(g.index(0, 4, 8));
  CHECK(rim.tag == BoundaryTag::Edge);
  CHECK(rim.on_omega_rim);
  CHECK(rim.rim_normal[0] == Catch::Approx(-1.0));
  CHECK(rim.rim_normal[1] == Catch::Approx(0.0));

  const NodeBoundary& top = g.boundary(g.index(4, 4, 8));
  CHECK(top.tag == BoundaryTag::OmegaFace);
  CHECK(top.normal[2] == Catch::Approx(1.0));
  const NodeBoundary& bottom = g.boundary(g.index(4, 4, 0));
  CHECK(bottom.tag == BoundaryTag::SFace);
  CHECK(bottom.normal[2] == Catch::Approx(-1.0));
}

TEST_CASE("rim quadrature excludes corners") {
  Grid g = build_grid({1.0, 1.0, 1.0}, 9, 9, 9);
  for (const auto& r : g.rim_nodes()) {
    bool at_corner = (r.i == 0 || r.i == g.nx() - 1) && (r.j == 0 || r.j == g.ny() - 1);
    CHECK_FALSE(at_corner);
  }
  // 4 edges x 7 non-corner nodes.
  CHECK(g.rim_nodes().size() == 28);
  std::vector<double> one(g.rim_nodes().size(), 1.0);
  // Each edge integrates to lx - hx (corners dropped from the trapezoid sum).
  CHECK(g.integrate_rim(one) == Catch::Approx(4.0 * (1.0 - 1.0 / 8)).margin(1e-14));
}
