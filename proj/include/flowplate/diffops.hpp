#pragma once

#include <array>
#include <vector>

#include "flowplate/ambient.hpp"
#include "flowplate/fields.hpp"
#include "flowplate/grid.hpp"

namespace flowplate {

struct FluidParams {
  double nu = 1.0;      // dynamic viscosity
  double lambda = 0.0;  // Lame first parameter
  double eta = 1.0;     // drag coefficient

  void validate() const {
    if (!(nu > 0.0)) throw ConfigError("fluid params: nu must be > 0");
    if (!(lambda >= 0.0)) throw ConfigError("fluid params: lambda must be >= 0");
    if (!(eta > 0.0)) throw ConfigError("fluid params: eta must be > 0");
  }
};

namespace detail {

struct StencilEntry {
  int offset;  // position along the axis
  double coeff;
};

// Assemble an N x N operator applying a 1-D stencil along one axis.
template <typename RowFn>
SpMat axis_operator(const Grid& g, int axis, RowFn row) {
  const int n[3] = {g.nx(), g.ny(), g.nz()};
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(g.num_nodes()) * 3);
  for (int i = 0; i < g.nx(); ++i)
    for (int j = 0; j < g.ny(); ++j)
      for (int k = 0; k < g.nz(); ++k) {
        const int c[3] = {i, j, k};
        const int m = c[axis];
        const int idx = g.index(i, j, k);
        for (const StencilEntry& e : row(m, n[axis])) {
          int cc[3] = {i, j, k};
          cc[axis] = e.offset;
          trips.emplace_back(idx, g.index(cc[0], cc[1], cc[2]), e.coeff);
        }
      }
  SpMat M(g.num_nodes(), g.num_nodes());
  M.setFromTriplets(trips.begin(), trips.end());
  return M;
}

inline std::vector<StencilEntry> d1_row(int m, int n, double h) {
  if (m == 0)
    return {{0, -1.5 / h}, {1, 2.0 / h}, {2, -0.5 / h}};
  if (m == n - 1)
    return {{n - 1, 1.5 / h}, {n - 2, -2.0 / h}, {n - 3, 0.5 / h}};
  return {{m - 1, -0.5 / h}, {m + 1, 0.5 / h}};
}

inline std::vector<StencilEntry> d2_row(int m, int n, double h) {
  const double h2 = h * h;
  if (m == 0)
    return {{0, 2.0 / h2}, {1, -5.0 / h2}, {2, 4.0 / h2}, {3, -1.0 / h2}};
  if (m == n - 1)
    return {{n - 1, 2.0 / h2}, {n - 2, -5.0 / h2}, {n - 3, 4.0 / h2}, {n - 4, -1.0 / h2}};
  return {{m - 1, 1.0 / h2}, {m, -2.0 / h2}, {m + 1, 1.0 / h2}};
}

// SBP(2,1) first derivative: centered interior, 2-point one-sided at the ends.
// With the trapezoid weight H it satisfies H D + D^T H = diag(-1,0,...,0,1).
inline std::vector<StencilEntry> sbp_row(int m, int n, double h) {
  if (m == 0) return {{0, -1.0 / h}, {1, 1.0 / h}};
  if (m == n - 1) return {{n - 1, 1.0 / h}, {n - 2, -1.0 / h}};
  return {{m - 1, -0.5 / h}, {m + 1, 0.5 / h}};
}

}  // namespace detail

// First derivative along an axis, second-order one-sided boundary closures.
inline SpMat derivative_matrix(const Grid& g, int axis) {
  const double h[3] = {g.hx(), g.hy(), g.hz()};
  return detail::axis_operator(g, axis, [&](int m, int n) {
    return detail::d1_row(m, n, h[axis]);
  });
}

inline SpMat second_derivative_matrix(const Grid& g, int axis) {
  const double h[3] = {g.hx(), g.hy(), g.hz()};
  return detail::axis_operator(g, axis, [&](int m, int n) {
    return detail::d2_row(m, n, h[axis]);
  });
}

inline SpMat sbp_derivative_matrix(const Grid& g, int axis) {
  const double h[3] = {g.hx(), g.hy(), g.hz()};
  return detail::axis_operator(g, axis, [&](int m, int n) {
    return detail::sbp_row(m, n, h[axis]);
  });
}

// Bundle of the three first-derivative operators, built once per grid.
struct DerivativeOps {
  std::array<SpMat, 3> d;
  explicit DerivativeOps(const Grid& g)
      : d{derivative_matrix(g, 0), derivative_matrix(g, 1),
          derivative_matrix(g, 2)} {}
};

inline VectorField grad(const DerivativeOps& ops, const Vec& f) {
  VectorField out(static_cast<int>(f.size()));
  for (int a = 0; a < 3; ++a) out.component(a) = ops.d[a] * f;
  return out;
}

inline Vec div(const DerivativeOps& ops, const VectorField& u) {
  Vec out = ops.d[0] * Vec(u.component(0));
  out += ops.d[1] * Vec(u.component(1));
  out += ops.d[2] * Vec(u.component(2));
  return out;
}

inline Vec advect(const Grid& g, const DerivativeOps& ops, const AmbientFlow& U,
                  const Vec& f) {
  VectorField gf = grad(ops, f);
  Vec out(f.size());
  for (int idx = 0; idx < g.num_nodes(); ++idx) {
    auto p = g.position(idx);
    auto u = U.value(p[0], p[1], p[2]);
    out[idx] = u[0] * gf.comp(0, idx) + u[1] * gf.comp(1, idx) +
               u[2] * gf.comp(2, idx);
  }
  return out;
}

inline VectorField advect(const Grid& g, const DerivativeOps& ops,
                          const AmbientFlow& U, const VectorField& u) {
  VectorField out(u.n());
  for (int c = 0; c < 3; ++c) out.component(c) = advect(g, ops, U, Vec(u.component(c)));
  return out;
}

// Symmetric 3x3 tensor field, stored per (i<=j) pair.
struct TensorField {
  int n = 0;
  std::array<Vec, 6> m;  // 00,11,22,01,02,12
  static int pair_index(int i, int j) {
    if (i == j) return i;
    int a = std::min(i, j), b = std::max(i, j);
    if (a == 0 && b == 1) return 3;
    if (a == 0 && b == 2) return 4;
    return 5;
  }
  const Vec& comp(int i, int j) const { return m[pair_index(i, j)]; }
  Vec& comp(int i, int j) { return m[pair_index(i, j)]; }
};

inline TensorField strain(const DerivativeOps& ops, const VectorField& u) {
  TensorField e;
  e.n = u.n();
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      e.comp(i, j) = 0.5 * (ops.d[j] * Vec(u.component(i)) +
                            ops.d[i] * Vec(u.component(j)));
  return e;
}

inline TensorField stress(const DerivativeOps& ops, const VectorField& u,
                          const FluidParams& par) {
  TensorField e = strain(ops, u);
  Vec tr = e.comp(0, 0) + e.comp(1, 1) + e.comp(2, 2);
  TensorField s;
  s.n = e.n;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      s.comp(i, j) = 2.0 * par.nu * e.comp(i, j);
      if (i == j) s.comp(i, j) += par.lambda * tr;
    }
  return s;
}

// (sigma(u), epsilon(v)) by quadrature; off-diagonal pairs counted twice.
inline double stress_form(const Grid& g, const DerivativeOps& ops,
                          const VectorField& u, const VectorField& v,
                          const FluidParams& par) {
  TensorField s = stress(ops, u, par);
  TensorField e = strain(ops, v);
  const Vec& w = g.volume_weights();
  double acc = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      acc += w.dot(s.comp(i, j).cwiseProduct(e.comp(i, j)));
  return acc;
}

// div sigma(u) in flux form (derivatives of the stress components).
inline VectorField div_stress(const DerivativeOps& ops, const VectorField& u,
                              const FluidParams& par) {
  TensorField s = stress(ops, u, par);
  VectorField out(u.n());
  for (int i = 0; i < 3; ++i) {
    Vec acc = ops.d[0] * s.comp(i, 0);
    acc += ops.d[1] * s.comp(i, 1);
    acc += ops.d[2] * s.comp(i, 2);
    out.component(i) = acc;
  }
  return out;
}

// div sigma(u) = nu Lap u + (nu+lambda) grad div u, the second route.
inline VectorField div_stress_laplacian_route(const Grid& g,
                                              const DerivativeOps& ops,
                                              const VectorField& u,
                                              const FluidParams& par) {
  SpMat dxx = second_derivative_matrix(g, 0);
  SpMat dyy = second_derivative_matrix(g, 1);
  SpMat dzz = second_derivative_matrix(g, 2);
  Vec dv = div(ops, u);
  VectorField out(u.n());
  for (int c = 0; c < 3; ++c) {
    Vec comp = u.component(c);
    out.component(c) = par.nu * (dxx * comp + dyy * comp + dzz * comp) +
                       (par.nu + par.lambda) * (ops.d[c] * dv);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Plate-side (2-D) operators on the interior Omega DOFs. Fields vanish on the
// rim, so centered stencils referencing rim nodes simply drop those entries.

namespace detail {

template <typename CoeffFn>
SpMat omega_operator(const Grid& g, CoeffFn coeffs) {
  // coeffs(i, j) returns a list of ((di, dj), c) taps relative to (i, j).
  std::vector<Triplet> trips;
  const int nx = g.nx(), ny = g.ny();
  for (int i = 1; i < nx - 1; ++i)
    for (int j = 1; j < ny - 1; ++j) {
      const int row = g.omega_index(i, j);
      for (auto& [off, c] : coeffs(i, j)) {
        const int ii = i + off[0], jj = j + off[1];
        if (ii <= 0 || ii >= nx - 1 || jj <= 0 || jj >= ny - 1) continue;
        trips.emplace_back(row, g.omega_index(ii, jj), c);
      }
    }
  SpMat M(g.num_omega_nodes(), g.num_omega_nodes());
  M.setFromTriplets(trips.begin(), trips.end());
  return M;
}

}  // namespace detail

using OmegaTaps = std::vector<std::pair<std::array<int, 2>, double>>;

inline SpMat omega_dx(const Grid& g) {
  const double h = g.hx();
  return detail::omega_operator(g, [h](int, int) {
    return OmegaTaps{{{-1, 0}, -0.5 / h}, {{1, 0}, 0.5 / h}};
  });
}

inline SpMat omega_dy(const Grid& g) {
  const double h = g.hy();
  return detail::omega_operator(g, [h](int, int) {
    return OmegaTaps{{{0, -1}, -0.5 / h}, {{0, 1}, 0.5 / h}};
  });
}

inline SpMat omega_dxx(const Grid& g) {
  const double h2 = g.hx() * g.hx();
  return detail::omega_operator(g, [h2](int, int) {
    return OmegaTaps{{{-1, 0}, 1.0 / h2}, {{0, 0}, -2.0 / h2}, {{1, 0}, 1.0 / h2}};
  });
}

inline SpMat omega_dyy(const Grid& g) {
  const double h2 = g.hy() * g.hy();
  return detail::omega_operator(g, [h2](int, int) {
    return OmegaTaps{{{0, -1}, 1.0 / h2}, {{0, 0}, -2.0 / h2}, {{0, 1}, 1.0 / h2}};
  });
}

inline SpMat omega_dxy(const Grid& g) {
  const double c = 1.0 / (4.0 * g.hx() * g.hy());
  return detail::omega_operator(g, [c](int, int) {
    return OmegaTaps{{{-1, -1}, c}, {{1, 1}, c}, {{-1, 1}, -c}, {{1, -1}, -c}};
  });
}

// 5-point Dirichlet Laplacian on the interior Omega DOFs (symmetric, negative
// definite as -A_D; we return the Laplacian itself, i.e. negative definite).
inline SpMat omega_laplacian(const Grid& g) {
  SpMat L = omega_dxx(g);
  L += omega_dyy(g);
  return L;
}

// 13-point clamped biharmonic: w = 0 on the rim (embedded zeros) and
// d_nu w = 0 encoded by ghost reflection w(-h) = w(h) across the rim.
inline SpMat biharmonic_clamped(const Grid& g) {
  const int nx = g.nx(), ny = g.ny();
  const double cx = 1.0 / std::pow(g.hx(), 4);
  const double cy = 1.0 / std::pow(g.hy(), 4);
  const double cxy = 2.0 / (g.hx() * g.hx() * g.hy() * g.hy());
  std::vector<Triplet> trips;
  auto add = [&](int row, int i, int j, double c) {
    // Fold ghosts across the rim lines (reflection), drop rim zeros.
    if (i == -1) i = 1;
    if (i == nx) i = nx - 2;
    if (j == -1) j = 1;
    if (j == ny) j = ny - 2;
    if (i <= 0 || i >= nx - 1 || j <= 0 || j >= ny - 1) return;
    trips.emplace_back(row, g.omega_index(i, j), c);
  };
  const double q4[5] = {1, -4, 6, -4, 1};
  const double q2[3] = {1, -2, 1};
  for (int i = 1; i < nx - 1; ++i)
    for (int j = 1; j < ny - 1; ++j) {
      const int row = g.omega_index(i, j);
      for (int o = -2; o <= 2; ++o) add(row, i + o, j, cx * q4[o + 2]);
      for (int o = -2; o <= 2; ++o) add(row, i, j + o, cy * q4[o + 2]);
      for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b)
          add(row, i + a, j + b, cxy * q2[a + 1] * q2[b + 1]);
    }
  SpMat B(g.num_omega_nodes(), g.num_omega_nodes());
  B.setFromTriplets(trips.begin(), trips.end());
  return B;
}

// ---------------------------------------------------------------------------
// Traces.

// u.n at face-interior boundary nodes (0 elsewhere).
inline Vec normal_trace(const Grid& g, const VectorField& u) {
  Vec out = Vec::Zero(g.num_nodes());
  for (int idx : g.boundary_nodes()) {
    const NodeBoundary& nb = g.boundary(idx);
    if (nb.tag != BoundaryTag::SFace && nb.tag != BoundaryTag::OmegaFace) continue;
    out[idx] = nb.normal[0] * u.comp(0, idx) + nb.normal[1] * u.comp(1, idx) +
               nb.normal[2] * u.comp(2, idx);
  }
  return out;
}

// Tangential gradient of a full-top-face field, centered with second-order
// one-sided closures at the rim.
inline std::array<Vec, 2> tangential_gradient_top(const Grid& g, const Vec& f_top) {
  const int nx = g.nx(), ny = g.ny();
  Vec gx(g.num_top_nodes()), gy(g.num_top_nodes());
  auto val = [&](int i, int j) { return f_top[g.top_index(i, j)]; };
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      double dx, dy;
      if (i == 0) dx = (-1.5 * val(0, j) + 2.0 * val(1, j) - 0.5 * val(2, j)) / g.hx();
      else if (i == nx - 1)
        dx = (1.5 * val(nx - 1, j) - 2.0 * val(nx - 2, j) + 0.5 * val(nx - 3, j)) / g.hx();
      else dx = (val(i + 1, j) - val(i - 1, j)) / (2.0 * g.hx());
      if (j == 0) dy = (-1.5 * val(i, 0) + 2.0 * val(i, 1) - 0.5 * val(i, 2)) / g.hy();
      else if (j == ny - 1)
        dy = (1.5 * val(i, ny - 1) - 2.0 * val(i, ny - 2) + 0.5 * val(i, ny - 3)) / g.hy();
      else dy = (val(i, j + 1) - val(i, j - 1)) / (2.0 * g.hy());
      gx[g.top_index(i, j)] = dx;
      gy[g.top_index(i, j)] = dy;
    }
  return {gx, gy};
}

}  // namespace flowplate
