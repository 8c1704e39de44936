#pragma once

#include <array>
#include <string>
#include <vector>

#include "flowplate/core.hpp"

namespace flowplate {

// Box fluid domain [0,lx] x [0,ly] x [-lz,0]. The elastic face Omega is the
// open top face at x3 = 0; the rigid wall S is the rest of the boundary.
struct BoxDomain {
  double lx = 1.0;
  double ly = 1.0;
  double lz = 1.0;

  void validate() const {
    if (!(lx > 0.0 && ly > 0.0 && lz > 0.0))
      throw ConfigError("BoxDomain: all lengths must be positive");
  }
};

enum class BoundaryTag : int {
  Interior = 0,
  OmegaFace,   // interior node of the top face
  SFace,       // interior node of a rigid face
  Edge,        // node on a 1-D edge of the boundary (incl. the Omega rim)
  Corner,      // one of the 8 box corners
};

// Face ids for SFace / edge bookkeeping: 0:x=0 1:x=lx 2:y=0 3:y=ly 4:z=-lz 5:z=0.
struct NodeBoundary {
  BoundaryTag tag = BoundaryTag::Interior;
  int face = -1;                      // valid for SFace; 5 marks the top face
  std::array<double, 3> normal{0, 0, 0};   // outward normal for face nodes
  bool on_omega_rim = false;          // node lies on the rim of the top face
  std::array<double, 2> rim_normal{0, 0};  // Omega-outward nu on the rim
};

// Collocated tensor grid over a BoxDomain. Node index is lexicographic in the
// coordinate tuple (x, y, z): idx = (i*ny + j)*nz + k, z fastest.
class Grid {
 public:
  Grid(const BoxDomain& dom, int nx, int ny, int nz)
      : domain_(dom), nx_(nx), ny_(ny), nz_(nz) {
    dom.validate();
    const char* axes = "xyz";
    const int counts[3] = {nx, ny, nz};
    for (int a = 0; a < 3; ++a) {
      if (counts[a] < 5)
        throw ConfigError(std::string("grid: resolution on axis '") + axes[a] +
                          "' is below the stencil width (need >= 5, got " +
                          std::to_string(counts[a]) + ")");
    }
    hx_ = dom.lx / (nx - 1);
    hy_ = dom.ly / (ny - 1);
    hz_ = dom.lz / (nz - 1);
    classify_boundary();
    build_quadrature();
  }

  const BoxDomain& domain() const { return domain_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int nz() const { return nz_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }
  double hz() const { return hz_; }

  int num_nodes() const { return nx_ * ny_ * nz_; }
  // Interior nodes of the top face = DOF set of the plate fields.
  int num_omega_nodes() const { return (nx_ - 2) * (ny_ - 2); }
  int num_top_nodes() const { return nx_ * ny_; }

  int index(int i, int j, int k) const { return (i * ny_ + j) * nz_ + k; }
  std::array<int, 3> coords_of(int idx) const {
    const int k = idx % nz_;
    const int j = (idx / nz_) % ny_;
    const int i = idx / (nz_ * ny_);
    return {i, j, k};
  }

  double x(int i) const { return i * hx_; }
  double y(int j) const { return j * hy_; }
  double z(int k) const { return -domain_.lz + k * hz_; }
  std::array<double, 3> position(int idx) const {
    auto c = coords_of(idx);
    return {x(c[0]), y(c[1]), z(c[2])};
  }

  // Plate (Omega) indexing: interior top-face nodes, i=1..nx-2, j=1..ny-2,
  // q = (i-1)*(ny-2) + (j-1). Vanishing on the rim is implicit.
  int omega_index(int i, int j) const { return (i - 1) * (ny_ - 2) + (j - 1); }
  std::array<int, 2> omega_coords(int q) const {
    return {q / (ny_ - 2) + 1, q % (ny_ - 2) + 1};
  }
  // Full top face indexing (includes the rim), t = i*ny + j.
  int top_index(int i, int j) const { return i * ny_ + j; }

  bool is_boundary(int i, int j, int k) const {
    return i == 0 || i == nx_ - 1 || j == 0 || j == ny_ - 1 || k == 0 ||
           k == nz_ - 1;
  }
  const NodeBoundary& boundary(int idx) const { return boundary_[idx]; }
  const std::vector<int>& boundary_nodes() const { return boundary_nodes_; }

  // Quadrature weights (trapezoid). Volume over the box, surface over the full
  // top rectangle, curve over the Omega rim with corner nodes excluded.
  const Vec& volume_weights() const { return w_vol_; }
  const Vec& omega_weights() const { return w_omega_; }       // size (nx-2)(ny-2)
  const Vec& top_face_weights() const { return w_top_; }      // size nx*ny
  double axis_weight_x(int i) const { return (i == 0 || i == nx_ - 1) ? hx_ / 2 : hx_; }
  double axis_weight_y(int j) const { return (j == 0 || j == ny_ - 1) ? hy_ / 2 : hy_; }
  double axis_weight_z(int k) const { return (k == 0 || k == nz_ - 1) ? hz_ / 2 : hz_; }

  double integrate_volume(const Vec& f) const { return w_vol_.dot(f); }
  double integrate_omega(const Vec& f_omega) const { return w_omega_.dot(f_omega); }
  double integrate_top(const Vec& f_top) const { return w_top_.dot(f_top); }

  // Rim quadrature node: top-face rim node that is not a rectangle corner.
  struct RimNode {
    int i, j;                      // top-face lattice coordinates
    double weight;                 // 1-D trapezoid weight along the edge
    std::array<double, 2> nu;      // Omega-outward normal
    bool corner_adjacent;          // neighbors a corner along its edge
  };
  const std::vector<RimNode>& rim_nodes() const { return rim_nodes_; }

  double integrate_rim(const std::vector<double>& f_rim) const {
    double s = 0.0;
    for (std::size_t r = 0; r < rim_nodes_.size(); ++r)
      s += rim_nodes_[r].weight * f_rim[r];
    return s;
  }

 private:
  void classify_boundary() {
    boundary_.assign(num_nodes(), NodeBoundary{});
    for (int i = 0; i < nx_; ++i)
      for (int j = 0; j < ny_; ++j)
        for (int k = 0; k < nz_; ++k) {
          if (!is_boundary(i, j, k)) continue;
          const int idx = index(i, j, k);
          NodeBoundary nb;
          int extremes = 0;
          if (i == 0 || i == nx_ - 1) ++extremes;
          if (j == 0 || j == ny_ - 1) ++extremes;
          if (k == 0 || k == nz_ - 1) ++extremes;
          if (extremes == 3) {
            nb.tag = BoundaryTag::Corner;
          } else if (extremes == 2) {
            nb.tag = BoundaryTag::Edge;
          } else {
            // A face-interior node.
            if (k == nz_ - 1) {
              nb.tag = BoundaryTag::OmegaFace;
              nb.face = 5;
              nb.normal = {0, 0, 1};
            } else {
              nb.tag = BoundaryTag::SFace;
              if (i == 0) { nb.face = 0; nb.normal = {-1, 0, 0}; }
              else if (i == nx_ - 1) { nb.face = 1; nb.normal = {1, 0, 0}; }
              else if (j == 0) { nb.face = 2; nb.normal = {0, -1, 0}; }
              else if (j == ny_ - 1) { nb.face = 3; nb.normal = {0, 1, 0}; }
              else { nb.face = 4; nb.normal = {0, 0, -1}; }
            }
          }
          // Omega rim: top-face nodes with exactly one lateral extreme.
          if (k == nz_ - 1 && extremes == 2) {
            nb.on_omega_rim = true;
            if (i == 0) nb.rim_normal = {-1, 0};
            else if (i == nx_ - 1) nb.rim_normal = {1, 0};
            else if (j == 0) nb.rim_normal = {0, -1};
            else nb.rim_normal = {0, 1};
          }
          boundary_[idx] = nb;
          boundary_nodes_.push_back(idx);
        }
  }

  void build_quadrature() {
    w_vol_.resize(num_nodes());
    for (int i = 0; i < nx_; ++i)
      for (int j = 0; j < ny_; ++j)
        for (int k = 0; k < nz_; ++k)
          w_vol_[index(i, j, k)] =
              axis_weight_x(i) * axis_weight_y(j) * axis_weight_z(k);

    w_top_.resize(num_top_nodes());
    for (int i = 0; i < nx_; ++i)
      for (int j = 0; j < ny_; ++j)
        w_top_[top_index(i, j)] = axis_weight_x(i) * axis_weight_y(j);

    w_omega_.resize(num_omega_nodes());
    for (int i = 1; i < nx_ - 1; ++i)
      for (int j = 1; j < ny_ - 1; ++j)
        w_omega_[omega_index(i, j)] = hx_ * hy_;

    // Rim quadrature: plain trapezoid interior weights with corners dropped.
    auto push_edge_x = [&](int j, std::array<double, 2> nu) {
      for (int i = 1; i < nx_ - 1; ++i)
        rim_nodes_.push_back({i, j, hx_, nu, i == 1 || i == nx_ - 2});
    };
    auto push_edge_y = [&](int i, std::array<double, 2> nu) {
      for (int j = 1; j < ny_ - 1; ++j)
        rim_nodes_.push_back({i, j, hy_, nu, j == 1 || j == ny_ - 2});
    };
    push_edge_y(0, {-1, 0});
    push_edge_y(nx_ - 1, {1, 0});
    push_edge_x(0, {0, -1});
    push_edge_x(ny_ - 1, {0, 1});
  }

  BoxDomain domain_;
  int nx_, ny_, nz_;
  double hx_, hy_, hz_;
  std::vector<NodeBoundary> boundary_;
  std::vector<int> boundary_nodes_;
  Vec w_vol_, w_omega_, w_top_;
  std::vector<RimNode> rim_nodes_;
};

inline Grid build_grid(const BoxDomain& dom, int nx, int ny, int nz) {
  return Grid(dom, nx, ny, nz);
}

}  // namespace flowplate
