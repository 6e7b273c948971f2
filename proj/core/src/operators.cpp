#include "icosw/operators.hpp"

namespace icosw {

EdgeField grad_num(const Mesh& m, const CellField& g) {
  EdgeField out(m.n_edges());
  for (int e = 0; e < m.n_edges(); ++e) {
    const Edge& ed = m.edge(e);
    out[e] = (g[ed.cell_j] - g[ed.cell_i]) / ed.dual_len;
  }
  return out;
}

CellField div_num(const Mesh& m, const EdgeField& V) {
  CellField out(m.n_cells());
  for (int i = 0; i < m.n_cells(); ++i) {
    const Cell& c = m.cell(i);
    double s = 0.0;
    for (int k = 0; k < 3; ++k) s += m.edge(c.edges[k]).primal_len * V.from(m, c.edges[k], i);
    out[i] = s / c.area;
  }
  return out;
}

DualField curl_num(const Mesh& m, const EdgeField& V) {
  DualField out(m.n_vertices());
  for (int v = 0; v < m.n_vertices(); ++v) {
    const DualCell& d = m.dual(v);
    double s = 0.0;
    for (int k = 0; k < d.n; ++k)
      s += m.edge(d.loop_edges[k]).dual_len * d.loop_signs[k] * V[d.loop_edges[k]];
    out[v] = s / d.area;
  }
  return out;
}

EdgeField flat(const Mesh& m, const EdgeField& V) {
  EdgeField out(m.n_edges());
  for (int e = 0; e < m.n_edges(); ++e) out[e] = -m.edge(e).dual_len * V[e];
  return out;
}

EdgeField coriolis_setup(const Mesh& m, double omega) {
  const double R = m.radius();
  return sample_edge_normal_velocity(m, [omega, R](const Vec3& p) {
    // Solid-body stream field; its surface curl normal component is
    // 2*omega*sin(theta).
    return Vec3{-omega * p.y, omega * p.x, 0.0};
  });
}

DualField absolute_vorticity(const Mesh& m, const EdgeField& V, const EdgeField& Rbar) {
  DualField out(m.n_vertices());
  for (int v = 0; v < m.n_vertices(); ++v) {
    const DualCell& d = m.dual(v);
    double s = 0.0;
    for (int k = 0; k < d.n; ++k) {
      const int e = d.loop_edges[k];
      s += m.edge(e).dual_len * d.loop_signs[k] * (V[e] + Rbar[e]);
    }
    out[v] = s;
  }
  return out;
}

namespace {
std::array<std::array<double, 3>, 3> projector(const Vec3& x) {
  const Vec3 n = normalized(x);
  const double N[3] = {n.x, n.y, n.z};
  std::array<std::array<double, 3>, 3> P{};
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) P[a][b] = (a == b ? 1.0 : 0.0) - N[a] * N[b];
  return P;
}
}  // namespace

Vec3 AnalyticSurfaceOperators::grad(const Vec3& x, const VectorFn& grad3) {
  const Vec3 g = grad3(x);
  const Vec3 n = normalized(x);
  return g - dot(g, n) * n;
}

double AnalyticSurfaceOperators::div(const Vec3& x, const JacobianFn& jac) {
  const auto P = projector(x);
  const auto J = jac(x);  // J[d][c] = d_d u_c
  double s = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int d = 0; d < 3; ++d) s += P[a][d] * J[d][a];
  return s;
}

double AnalyticSurfaceOperators::curl(const Vec3& x, const JacobianFn& jac) {
  const auto P = projector(x);
  const auto J = jac(x);
  const Vec3 n = normalized(x);
  const double N[3] = {n.x, n.y, n.z};
  // c_a = eps_abc P_bd J_dc
  auto eps = [](int a, int b, int c) -> double {
    return ((a == 0 && b == 1 && c == 2) || (a == 1 && b == 2 && c == 0) ||
            (a == 2 && b == 0 && c == 1))
               ? 1.0
           : ((a == 2 && b == 1 && c == 0) || (a == 0 && b == 2 && c == 1) ||
              (a == 1 && b == 0 && c == 2))
               ? -1.0
               : 0.0;
  };
  double s = 0.0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const double ev = eps(a, b, c);
        if (ev == 0.0) continue;
        for (int d = 0; d < 3; ++d) s += N[a] * ev * P[b][d] * J[d][c];
      }
  return s;
}

}  // namespace icosw
