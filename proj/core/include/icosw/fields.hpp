#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "icosw/mesh.hpp"
#include "icosw/vec3.hpp"

namespace icosw {

/// One scalar per undirected primal edge, stored in the canonical (i->j)
/// orientation. Reading the value "from" a cell flips the sign when the cell
/// sits on the j side, so V_ji = -V_ij by construction.
class EdgeField {
 public:
  EdgeField() = default;
  explicit EdgeField(int n, double fill = 0.0) : v_(n, fill) {}

  double operator[](int e) const { return v_[e]; }
  double& operator[](int e) { return v_[e]; }

  /// Value oriented out of the given cell.
  double from(const Mesh& m, int e, int cell) const { return m.outward_sign(e, cell) * v_[e]; }

  int size() const { return static_cast<int>(v_.size()); }
  const std::vector<double>& data() const { return v_; }
  std::vector<double>& data() { return v_; }

 private:
  std::vector<double> v_;
};

/// One scalar per triangle.
class CellField {
 public:
  CellField() = default;
  explicit CellField(int n, double fill = 0.0) : v_(n, fill) {}
  double operator[](int i) const { return v_[i]; }
  double& operator[](int i) { return v_[i]; }
  int size() const { return static_cast<int>(v_.size()); }
  const std::vector<double>& data() const { return v_; }
  std::vector<double>& data() { return v_; }

 private:
  std::vector<double> v_;
};

/// One scalar per vertex / dual cell.
class DualField {
 public:
  DualField() = default;
  explicit DualField(int n, double fill = 0.0) : v_(n, fill) {}
  double operator[](int i) const { return v_[i]; }
  double& operator[](int i) { return v_[i]; }
  int size() const { return static_cast<int>(v_.size()); }
  const std::vector<double>& data() const { return v_; }
  std::vector<double>& data() { return v_; }

 private:
  std::vector<double> v_;
};

using VectorFn = std::function<Vec3(const Vec3&)>;
using ScalarFn = std::function<double(const Vec3&)>;

/// V_ij = u(edge midpoint) . n_ij (midpoint rule for the edge-normal flux).
EdgeField sample_edge_normal_velocity(const Mesh& m, const VectorFn& u);

/// g_i = g(projected circumcenter of T_i).
CellField sample_cell_value(const Mesh& m, const ScalarFn& g);

/// g_e = g(vertex position).
DualField sample_vertex_value(const Mesh& m, const ScalarFn& g);

}  // namespace icosw
