#include "icosw/diagnostics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace icosw {

double total_energy(const Mesh& m, const EdgeField& V, const CellField& D, const CellField& B,
                    double g) {
  double kin = 0.0;
  for (int e = 0; e < m.n_edges(); ++e) {
    const Edge& ed = m.edge(e);
    const double dbar = 0.5 * (D[ed.cell_i] + D[ed.cell_j]);
    kin += 0.5 * dbar * ed.dual_len * ed.primal_len * V[e] * V[e];
  }
  double pot = 0.0;
  for (int i = 0; i < m.n_cells(); ++i) {
    const double eta = D[i] + B[i];
    pot += 0.5 * g * eta * eta * m.cell(i).area;
  }
  return kin + pot;
}

double potential_enstrophy(const Mesh& m, const EdgeField& V, const CellField& D,
                           const EdgeField& Rbar) {
  const DualField omega = absolute_vorticity(m, V, Rbar);
  double pe = 0.0;
  for (int v = 0; v < m.n_vertices(); ++v) {
    const DualCell& d = m.dual(v);
    double he = 0.0;
    for (int k = 0; k < d.n; ++k) he += d.overlap[k] * D[d.cells[k]];
    if (he <= 0.0)
      throw std::domain_error("nonpositive dual depth at vertex " + std::to_string(v));
    const double q = (omega[v] / d.area) / he;
    pe += 0.5 * d.area * he * q * q;
  }
  return pe;
}

double mass(const Mesh& m, const CellField& D) {
  double s = 0.0;
  for (int i = 0; i < m.n_cells(); ++i) s += m.cell(i).area * D[i];
  return s;
}

double potential_circulation(const Mesh& m, const EdgeField& V, const EdgeField& Rbar) {
  const DualField omega = absolute_vorticity(m, V, Rbar);
  double s = 0.0;
  for (int v = 0; v < m.n_vertices(); ++v) s += omega[v];
  return s;
}

std::pair<double, double> error_norms(const std::vector<double>& u,
                                      const std::vector<double>& u0,
                                      const std::vector<double>& weights) {
  if (u.size() != u0.size() || u.size() != weights.size())
    throw std::invalid_argument("error_norms: size mismatch");
  double max_diff = 0.0, max_ref = 0.0;
  double num2 = 0.0, den2 = 0.0;
  for (size_t k = 0; k < u.size(); ++k) {
    max_diff = std::max(max_diff, std::fabs(u[k] - u0[k]));
    max_ref = std::max(max_ref, std::fabs(u0[k]));
    const double wd = weights[k] * (u[k] - u0[k]);
    num2 += wd * wd;
    den2 += weights[k] * u0[k] * u0[k];
  }
  if (max_ref == 0.0 || den2 == 0.0)
    throw std::domain_error("error_norms: zero reference norm");
  return {max_diff / max_ref, std::sqrt(num2) / std::sqrt(den2)};
}

}  // namespace icosw
