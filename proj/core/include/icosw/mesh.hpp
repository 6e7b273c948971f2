#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "icosw/vec3.hpp"

namespace icosw {

/// Triangle (primal cell) of the icosahedral mesh.
struct Cell {
  std::array<int, 3> verts;      // counterclockwise seen from outside
  std::array<int, 3> edges;      // edges[k] joins verts[k], verts[(k+1)%3]
  std::array<int, 3> neighbors;  // neighbor across edges[k]
  Vec3 center;                   // circumcenter projected to the sphere
  double area = 0.0;             // spherical area
};

/// Undirected primal edge with canonical orientation cell_i -> cell_j.
struct Edge {
  int cell_i = -1, cell_j = -1;  // canonical pair, cell_i < cell_j
  int vert_a = -1, vert_b = -1;  // primal endpoints = dual endpoints
  int vert_minus = -1;           // zeta_- per the handedness rule
  int vert_plus = -1;            // zeta_+
  double primal_len = 0.0;       // f_ij, geodesic
  double dual_len = 0.0;         // h_ij, geodesic between circumcenters
  Vec3 midpoint;                 // on the sphere
  Vec3 normal;                   // unit tangent normal, points cell_i -> cell_j
};

/// Stencil for the advection term at one loop vertex (zeta_- or zeta_+)
/// of an edge ij: the two flanking edges ii_s and jj_s, their neighbor
/// cells, outward signs for V, and the intersection areas |zeta_s ∩ T|.
struct LoopStencil {
  int vert = -1;              // the loop vertex
  int edge_ii = -1;           // other edge of cell_i at this vertex
  int edge_jj = -1;           // other edge of cell_j at this vertex
  int cell_in = -1;           // neighbor of cell_i across edge_ii (i_s)
  int cell_jn = -1;           // neighbor of cell_j across edge_jj (j_s)
  double sign_ii = 0.0;       // +1 if edge_ii is canonically oriented out of cell_i
  double sign_jj = 0.0;       // +1 if edge_jj is canonically oriented out of cell_j
  double overlap_i = 0.0;     // |zeta_s ∩ T_i|  [m^2]
  double overlap_j = 0.0;     // |zeta_s ∩ T_j|  [m^2]
};

/// Dual cell (hexagon, or pentagon at the 12 icosahedron corners) around a vertex.
struct DualCell {
  Vec3 pos;                              // vertex position on the sphere
  double area = 0.0;                     // |zeta_e|
  int n = 0;                             // 5 or 6 incident cells
  std::array<int, 6> cells{};            // incident cells, counterclockwise
  std::array<double, 6> overlap{};       // K^e_k = |zeta_e ∩ T_k| / |zeta_e|
  std::array<int, 6> loop_edges{};       // boundary dual edges, counterclockwise
  std::array<double, 6> loop_signs{};    // +1 if traversal matches canonical i->j
};

struct MeshBuildOptions {
  bool optimize = false;       // dual-alignment vertex relaxation before geometry
  int optimize_iters = 50;
  double optimize_tol = 1e-13; // max vertex displacement (unit sphere) to stop
  int max_level = 9;           // memory guard
};

/// Immutable icosahedral primal/dual mesh of the sphere. Thread-safe for
/// concurrent readers after construction.
class Mesh {
 public:
  static Mesh build(int level, double radius_m, const MeshBuildOptions& opts = {});

  int level() const { return level_; }
  double radius() const { return radius_; }

  int n_cells() const { return static_cast<int>(cells_.size()); }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  int n_vertices() const { return static_cast<int>(duals_.size()); }

  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<DualCell>& duals() const { return duals_; }

  const Cell& cell(int i) const { return cells_[i]; }
  const Edge& edge(int e) const { return edges_[e]; }
  const DualCell& dual(int v) const { return duals_[v]; }

  /// +1 if edge e is canonically oriented out of cell c, -1 if into it.
  double outward_sign(int e, int c) const {
    return edges_[e].cell_i == c ? 1.0 : -1.0;
  }

  /// Advection stencils: per edge, the loop stencils at zeta_- and zeta_+.
  const LoopStencil& stencil_minus(int e) const { return stencil_minus_[e]; }
  const LoopStencil& stencil_plus(int e) const { return stencil_plus_[e]; }

  double total_area() const { return total_area_; }

  /// K^e_k list for one vertex: pairs (cell id, overlap ratio).
  std::vector<std::pair<int, double>> overlap_ratios(int vertex) const;

  std::string summary() const;

 private:
  Mesh() = default;

  int level_ = 0;
  double radius_ = 0.0;
  double total_area_ = 0.0;
  std::vector<Cell> cells_;
  std::vector<Edge> edges_;
  std::vector<DualCell> duals_;
  std::vector<LoopStencil> stencil_minus_;
  std::vector<LoopStencil> stencil_plus_;
};

}  // namespace icosw
