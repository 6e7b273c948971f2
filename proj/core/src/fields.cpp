#include "icosw/fields.hpp"

namespace icosw {

EdgeField sample_edge_normal_velocity(const Mesh& m, const VectorFn& u) {
  EdgeField V(m.n_edges());
  for (int e = 0; e < m.n_edges(); ++e) V[e] = dot(u(m.edge(e).midpoint), m.edge(e).normal);
  return V;
}

CellField sample_cell_value(const Mesh& m, const ScalarFn& g) {
  CellField f(m.n_cells());
  for (int i = 0; i < m.n_cells(); ++i) f[i] = g(m.cell(i).center);
  return f;
}

DualField sample_vertex_value(const Mesh& m, const ScalarFn& g) {
  DualField f(m.n_vertices());
  for (int v = 0; v < m.n_vertices(); ++v) f[v] = g(m.dual(v).pos);
  return f;
}

}  // namespace icosw
