#pragma once

#include <functional>

#include "flowplate/grid.hpp"

namespace flowplate {

// Scalar fields are plain Eigen vectors over grid nodes (or over the plate
// DOFs, by size). Vector fields store the three components block-wise:
// [u1 | u2 | u3], each of length grid.num_nodes().
struct VectorField {
  Vec data;

  VectorField() = default;
  explicit VectorField(int n_nodes) : data(Vec::Zero(3 * n_nodes)) {}

  int n() const { return static_cast<int>(data.size()) / 3; }
  double& comp(int c, int idx) { return data[c * n() + idx]; }
  double comp(int c, int idx) const { return data[c * n() + idx]; }
  Eigen::VectorBlock<Vec> component(int c) { return data.segment(c * n(), n()); }
  Eigen::VectorBlock<const Vec> component(int c) const {
    return data.segment(c * n(), n());
  }
};

inline Vec sample_scalar(const Grid& g,
                         const std::function<double(double, double, double)>& f) {
  Vec out(g.num_nodes());
  for (int idx = 0; idx < g.num_nodes(); ++idx) {
    auto p = g.position(idx);
    out[idx] = f(p[0], p[1], p[2]);
  }
  return out;
}

inline VectorField sample_vector(
    const Grid& g,
    const std::function<std::array<double, 3>(double, double, double)>& f) {
  VectorField out(g.num_nodes());
  for (int idx = 0; idx < g.num_nodes(); ++idx) {
    auto p = g.position(idx);
    auto v = f(p[0], p[1], p[2]);
    for (int c = 0; c < 3; ++c) out.comp(c, idx) = v[c];
  }
  return out;
}

// Plate-field sampling over the interior top-face nodes.
inline Vec sample_omega(const Grid& g,
                        const std::function<double(double, double)>& f) {
  Vec out(g.num_omega_nodes());
  for (int i = 1; i < g.nx() - 1; ++i)
    for (int j = 1; j < g.ny() - 1; ++j)
      out[g.omega_index(i, j)] = f(g.x(i), g.y(j));
  return out;
}

// Embed an interior-Omega field into the full top face with zeros on the rim.
inline Vec embed_omega_in_top(const Grid& g, const Vec& w_omega) {
  Vec out = Vec::Zero(g.num_top_nodes());
  for (int i = 1; i < g.nx() - 1; ++i)
    for (int j = 1; j < g.ny() - 1; ++j)
      out[g.top_index(i, j)] = w_omega[g.omega_index(i, j)];
  return out;
}

inline Vec restrict_top_to_omega(const Grid& g, const Vec& f_top) {
  Vec out(g.num_omega_nodes());
  for (int i = 1; i < g.nx() - 1; ++i)
    for (int j = 1; j < g.ny() - 1; ++j)
      out[g.omega_index(i, j)] = f_top[g.top_index(i, j)];
  return out;
}

// Restriction of a volume scalar field to the interior top-face nodes.
inline Vec restrict_to_omega(const Grid& g, const Vec& f) {
  Vec out(g.num_omega_nodes());
  const int ktop = g.nz() - 1;
  for (int i = 1; i < g.nx() - 1; ++i)
    for (int j = 1; j < g.ny() - 1; ++j)
      out[g.omega_index(i, j)] = f[g.index(i, j, ktop)];
  return out;
}

inline double l2_norm_volume(const Grid& g, const Vec& f) {
  return std::sqrt(g.volume_weights().dot(f.cwiseProduct(f)));
}

inline double l2_norm_volume(const Grid& g, const VectorField& u) {
  double s = 0.0;
  for (int c = 0; c < 3; ++c) {
    Vec comp = u.component(c);
    s += g.volume_weights().dot(comp.cwiseProduct(comp));
  }
  return std::sqrt(s);
}

inline double l2_norm_omega(const Grid& g, const Vec& f_omega) {
  return std::sqrt(g.omega_weights().dot(f_omega.cwiseProduct(f_omega)));
}

inline double inner_volume(const Grid& g, const Vec& a, const Vec& b) {
  return g.volume_weights().dot(a.cwiseProduct(b));
}

inline double inner_omega(const Grid& g, const Vec& a, const Vec& b) {
  return g.omega_weights().dot(a.cwiseProduct(b));
}

}  // namespace flowplate
