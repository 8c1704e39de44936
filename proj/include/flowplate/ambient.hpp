#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "flowplate/fields.hpp"
#include "flowplate/grid.hpp"

namespace flowplate {

enum class AmbientFamily { Zero, Channel, Swirl };

// Time-independent ambient flow with closed-form derivatives. Every family
// satisfies U·n = 0 on the whole boundary (membership in V0) and U3 = 0 on the
// top face, so the Omega restriction is the in-plane pair (U1, U2).
class AmbientFlow {
 public:
  using Eval3 = std::function<std::array<double, 3>(double, double, double)>;
  using EvalJac = std::function<Eigen::Matrix3d(double, double, double)>;
  using Eval1 = std::function<double(double, double, double)>;

  struct OmegaDerivs {
    // First tangential derivatives d_j U_i|_Omega, i,j in {1,2}.
    double d1u1, d2u1, d1u2, d2u2;
    // Second tangential derivatives per component.
    double d11u1, d12u1, d22u1;
    double d11u2, d12u2, d22u2;
  };
  using EvalOmega = std::function<std::array<double, 2>(double, double)>;
  using EvalOmegaDerivs = std::function<OmegaDerivs(double, double)>;

  AmbientFamily family = AmbientFamily::Zero;
  Eval3 value;
  EvalJac jacobian;
  Eval1 divergence;
  EvalOmega omega_value;
  EvalOmegaDerivs omega_derivs;
  double analytic_div_sup = 0.0;

  std::array<double, 3> operator()(double x, double y, double z) const {
    return value(x, y, z);
  }

  // (U . grad) U, used by the optional lower-order generator terms.
  std::array<double, 3> convective(double x, double y, double z) const {
    auto u = value(x, y, z);
    Eigen::Matrix3d j = jacobian(x, y, z);
    Eigen::Vector3d uv(u[0], u[1], u[2]);
    Eigen::Vector3d r = j * uv;
    return {r[0], r[1], r[2]};
  }
};

inline AmbientFlow make_zero_flow() {
  AmbientFlow f;
  f.family = AmbientFamily::Zero;
  f.value = [](double, double, double) { return std::array<double, 3>{0, 0, 0}; };
  f.jacobian = [](double, double, double) { return Eigen::Matrix3d::Zero().eval(); };
  f.divergence = [](double, double, double) { return 0.0; };
  f.omega_value = [](double, double) { return std::array<double, 2>{0, 0}; };
  f.omega_derivs = [](double, double) { return AmbientFlow::OmegaDerivs{}; };
  f.analytic_div_sup = 0.0;
  return f;
}

// U = (a0 sin(pi x1 / lx), 0, 0): tangential on all six faces, with
// div U = a0 (pi/lx) cos(pi x1/lx) nonzero, so the growth constant K is
// nontrivial.
inline AmbientFlow make_channel_flow(const BoxDomain& dom, double a0) {
  if (!std::isfinite(a0)) throw ConfigError("channel flow: amplitude must be finite");
  AmbientFlow f;
  f.family = AmbientFamily::Channel;
  const double w = M_PI / dom.lx;
  f.value = [a0, w](double x, double, double) {
    return std::array<double, 3>{a0 * std::sin(w * x), 0, 0};
  };
  f.jacobian = [a0, w](double x, double, double) {
    Eigen::Matrix3d j = Eigen::Matrix3d::Zero();
    j(0, 0) = a0 * w * std::cos(w * x);
    return j;
  };
  f.divergence = [a0, w](double x, double, double) {
    return a0 * w * std::cos(w * x);
  };
  f.omega_value = [a0, w](double x, double) {
    return std::array<double, 2>{a0 * std::sin(w * x), 0};
  };
  f.omega_derivs = [a0, w](double x, double) {
    AmbientFlow::OmegaDerivs d{};
    d.d1u1 = a0 * w * std::cos(w * x);
    d.d11u1 = -a0 * w * w * std::sin(w * x);
    return d;
  };
  f.analytic_div_sup = std::abs(a0) * w;
  return f;
}

// Divergence-free swirl from the stream function
// psi = s0 sin^2(pi x/lx) sin^2(pi y/ly) and vertical profile
// phi(z) = 1 - (z/lz)^2: U = (d2 psi * phi, -d1 psi * phi, 0).
inline AmbientFlow make_swirl_flow(const BoxDomain& dom, double s0) {
  if (!std::isfinite(s0)) throw ConfigError("swirl flow: amplitude must be finite");
  AmbientFlow f;
  f.family = AmbientFamily::Swirl;
  const double kx = M_PI / dom.lx, ky = M_PI / dom.ly, lz = dom.lz;

  auto A = [kx](double x) { return std::sin(kx * x) * std::sin(kx * x); };
  auto Ap = [kx](double x) { return kx * std::sin(2 * kx * x); };
  auto App = [kx](double x) { return 2 * kx * kx * std::cos(2 * kx * x); };
  auto Appp = [kx](double x) { return -4 * kx * kx * kx * std::sin(2 * kx * x); };
  auto B = [ky](double y) { return std::sin(ky * y) * std::sin(ky * y); };
  auto Bp = [ky](double y) { return ky * std::sin(2 * ky * y); };
  auto Bpp = [ky](double y) { return 2 * ky * ky * std::cos(2 * ky * y); };
  auto Bppp = [ky](double y) { return -4 * ky * ky * ky * std::sin(2 * ky * y); };
  auto Phi = [lz](double z) { return 1.0 - (z / lz) * (z / lz); };
  auto Phip = [lz](double z) { return -2.0 * z / (lz * lz); };

  f.value = [=](double x, double y, double z) {
    return std::array<double, 3>{s0 * A(x) * Bp(y) * Phi(z),
                                 -s0 * Ap(x) * B(y) * Phi(z), 0};
  };
  f.jacobian = [=](double x, double y, double z) {
    Eigen::Matrix3d j = Eigen::Matrix3d::Zero();
    j(0, 0) = s0 * Ap(x) * Bp(y) * Phi(z);
    j(0, 1) = s0 * A(x) * Bpp(y) * Phi(z);
    j(0, 2) = s0 * A(x) * Bp(y) * Phip(z);
    j(1, 0) = -s0 * App(x) * B(y) * Phi(z);
    j(1, 1) = -s0 * Ap(x) * Bp(y) * Phi(z);
    j(1, 2) = -s0 * Ap(x) * B(y) * Phip(z);
    return j;
  };
  f.divergence = [](double, double, double) { return 0.0; };
  f.omega_value = [=](double x, double y) {
    return std::array<double, 2>{s0 * A(x) * Bp(y), -s0 * Ap(x) * B(y)};
  };
  f.omega_derivs = [=](double x, double y) {
    AmbientFlow::OmegaDerivs d{};
    d.d1u1 = s0 * Ap(x) * Bp(y);
    d.d2u1 = s0 * A(x) * Bpp(y);
    d.d1u2 = -s0 * App(x) * B(y);
    d.d2u2 = -s0 * Ap(x) * Bp(y);
    d.d11u1 = s0 * App(x) * Bp(y);
    d.d12u1 = s0 * Ap(x) * Bpp(y);
    d.d22u1 = s0 * A(x) * Bppp(y);
    d.d11u2 = -s0 * Appp(x) * B(y);
    d.d12u2 = -s0 * App(x) * Bp(y);
    d.d22u2 = -s0 * Ap(x) * Bpp(y);
    return d;
  };
  f.analytic_div_sup = 0.0;
  return f;
}

inline AmbientFlow make_ambient(const std::string& family, const BoxDomain& dom,
                                double amplitude) {
  if (family == "zero") return make_zero_flow();
  if (family == "channel") return make_channel_flow(dom, amplitude);
  if (family == "swirl") return make_swirl_flow(dom, amplitude);
  throw ConfigError("ambient.family: unknown family '" + family + "'");
}

// Grid supremum of |div U|; the Theorem growth constant uses
// max(grid value, analytic supremum).
inline double div_sup(const AmbientFlow& U, const Grid& g) {
  double m = 0.0;
  for (int idx = 0; idx < g.num_nodes(); ++idx) {
    auto p = g.position(idx);
    m = std::max(m, std::abs(U.divergence(p[0], p[1], p[2])));
  }
  return m;
}

// Max of |U.n| over boundary nodes; V0 membership check. Face normals are
// used on faces; on edges and corners every adjoining face normal is tested.
inline double max_boundary_normal_trace(const AmbientFlow& U, const Grid& g) {
  double m = 0.0;
  for (int idx : g.boundary_nodes()) {
    auto c = g.coords_of(idx);
    auto p = g.position(idx);
    auto u = U.value(p[0], p[1], p[2]);
    if (c[0] == 0 || c[0] == g.nx() - 1) m = std::max(m, std::abs(u[0]));
    if (c[1] == 0 || c[1] == g.ny() - 1) m = std::max(m, std::abs(u[1]));
    if (c[2] == 0 || c[2] == g.nz() - 1) m = std::max(m, std::abs(u[2]));
  }
  return m;
}

inline Vec sample_div(const AmbientFlow& U, const Grid& g) {
  return sample_scalar(g, [&](double x, double y, double z) {
    return U.divergence(x, y, z);
  });
}

}  // namespace flowplate
