#include "icosw/dynamics.hpp"

#include <stdexcept>
#include <string>

namespace icosw {

EdgeField adv_term(const Mesh& m, const EdgeField& V, const CellField& D, const EdgeField& Rbar) {
  const DualField omega = absolute_vorticity(m, V, Rbar);
  EdgeField out(m.n_edges());
  for (int e = 0; e < m.n_edges(); ++e) {
    const Edge& ed = m.edge(e);
    const double dbar = 0.5 * (D[ed.cell_i] + D[ed.cell_j]);
    if (dbar <= 0.0)
      throw std::domain_error("nonpositive edge depth at edge " + std::to_string(e));

    auto group = [&](const LoopStencil& st) {
      const double omega_tilde = omega[st.vert] / m.dual(st.vert).area;
      const double di = st.overlap_i / (2.0 * m.cell(ed.cell_i).area) *
                        0.5 * (D[ed.cell_j] + D[st.cell_in]) *
                        m.edge(st.edge_ii).primal_len * st.sign_ii * V[st.edge_ii];
      const double dj = st.overlap_j / (2.0 * m.cell(ed.cell_j).area) *
                        0.5 * (D[ed.cell_i] + D[st.cell_jn]) *
                        m.edge(st.edge_jj).primal_len * st.sign_jj * V[st.edge_jj];
      return omega_tilde * (di + dj);
    };

    out[e] = (-group(m.stencil_minus(e)) + group(m.stencil_plus(e))) / (dbar * ed.dual_len);
  }
  return out;
}

EdgeField kinetic_term(const Mesh& m, const EdgeField& V) {
  // Per-cell kinetic sums kappa_i = sum_{edges of T_i} h f V^2 / (2 Omega_ii).
  CellField kappa(m.n_cells());
  for (int i = 0; i < m.n_cells(); ++i) {
    const Cell& c = m.cell(i);
    double s = 0.0;
    for (int k = 0; k < 3; ++k) {
      const Edge& e = m.edge(c.edges[k]);
      s += e.dual_len * e.primal_len * V[c.edges[k]] * V[c.edges[k]];
    }
    kappa[i] = s / (2.0 * c.area);
  }
  EdgeField out(m.n_edges());
  for (int e = 0; e < m.n_edges(); ++e) {
    const Edge& ed = m.edge(e);
    out[e] = -(kappa[ed.cell_j] - kappa[ed.cell_i]) / (2.0 * ed.dual_len);
  }
  return out;
}

EdgeField grad_pressure_term(const Mesh& m, const CellField& D, const CellField& B, double g) {
  EdgeField out(m.n_edges());
  for (int e = 0; e < m.n_edges(); ++e) {
    const Edge& ed = m.edge(e);
    out[e] = g / ed.dual_len *
             (D[ed.cell_j] + B[ed.cell_j] - D[ed.cell_i] - B[ed.cell_i]);
  }
  return out;
}

CellField mass_flux_div(const Mesh& m, const EdgeField& V, const CellField& D) {
  CellField out(m.n_cells());
  for (int i = 0; i < m.n_cells(); ++i) {
    const Cell& c = m.cell(i);
    double s = 0.0;
    for (int k = 0; k < 3; ++k) {
      const Edge& e = m.edge(c.edges[k]);
      const double dbar = 0.5 * (D[e.cell_i] + D[e.cell_j]);
      s += e.primal_len * V.from(m, c.edges[k], i) * dbar;
    }
    out[i] = s / c.area;
  }
  return out;
}

EdgeField momentum_tendency(const Mesh& m, const EdgeField& V, const CellField& D,
                            const StaticFields& st) {
  const EdgeField adv = adv_term(m, V, D, st.Rbar);
  const EdgeField kin = kinetic_term(m, V);
  const EdgeField prs = grad_pressure_term(m, D, st.B, st.g);
  EdgeField out(m.n_edges());
  for (int e = 0; e < m.n_edges(); ++e) out[e] = -adv[e] + kin[e] - prs[e];
  return out;
}

}  // namespace icosw
