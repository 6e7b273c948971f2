#include "icosw/reconstruct.hpp"

#include <cmath>
#include <stdexcept>

namespace icosw {

std::vector<Vec3> reconstruct_cell_velocity(const Mesh& m, const EdgeField& V) {
  std::vector<Vec3> out(m.n_cells());
  for (int i = 0; i < m.n_cells(); ++i) {
    const Cell& c = m.cell(i);
    const Vec3 up = normalized(c.center);
    Vec3 e1 = cross(up, std::fabs(up.z) < 0.9 ? Vec3{0, 0, 1} : Vec3{1, 0, 0});
    e1 = normalized(e1);
    const Vec3 e2 = cross(up, e1);

    // Normal equations of min_v sum_k (v.n_k - V_k)^2 over tangent v.
    double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
    for (int k = 0; k < 3; ++k) {
      const Vec3& n = m.edge(c.edges[k]).normal;
      const double n1 = dot(n, e1), n2 = dot(n, e2);
      a11 += n1 * n1;
      a12 += n1 * n2;
      a22 += n2 * n2;
      b1 += n1 * V[c.edges[k]];
      b2 += n2 * V[c.edges[k]];
    }
    const double det = a11 * a22 - a12 * a12;
    if (std::fabs(det) < 1e-30) throw std::runtime_error("degenerate edge normal set");
    const double x = (a22 * b1 - a12 * b2) / det;
    const double y = (a11 * b2 - a12 * b1) / det;
    out[i] = x * e1 + y * e2;
  }
  return out;
}

CellField cell_speed(const Mesh& m, const EdgeField& V) {
  const auto vec = reconstruct_cell_velocity(m, V);
  CellField out(m.n_cells());
  for (int i = 0; i < m.n_cells(); ++i) out[i] = norm(vec[i]);
  return out;
}

}  // namespace icosw
