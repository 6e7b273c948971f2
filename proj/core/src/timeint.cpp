#include "icosw/timeint.hpp"

#include <Eigen/Sparse>

#include <cmath>
#include <string>

namespace icosw {

namespace {

double max_norm_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t k = 0; k < a.size(); ++k) s = std::max(s, std::fabs(a[k] - b[k]));
  return s;
}

}  // namespace

std::vector<double> AdvectionGenerator::apply(const std::vector<double>& d) const {
  std::vector<double> out(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = -diag[i] * d[i];
    for (int k = 0; k < 3; ++k) s += offdiag[i][k] * d[cols[i][k]];
    out[i] = s;
  }
  return out;
}

AdvectionGenerator assemble_generator(const Mesh& m, const EdgeField& V) {
  AdvectionGenerator M;
  M.n = m.n_cells();
  M.diag.resize(M.n);
  M.cols.resize(M.n);
  M.offdiag.resize(M.n);
  for (int i = 0; i < M.n; ++i) {
    const Cell& c = m.cell(i);
    double divsum = 0.0;
    for (int k = 0; k < 3; ++k) {
      const Edge& e = m.edge(c.edges[k]);
      const double flux = e.primal_len * V.from(m, c.edges[k], i);
      M.cols[i][k] = c.neighbors[k];
      M.offdiag[i][k] = -flux / (2.0 * c.area);
      divsum += flux;
    }
    // diag stores -A_ii = -(1/2) div(V)_i
    M.diag[i] = -0.5 * divsum / c.area;
  }
  return M;
}

CellField cayley_depth_update(const AdvectionGenerator& M, const CellField& D, double dt,
                              const IntegratorConfig& cfg) {
  const int n = M.n;
  using Sparse = Eigen::SparseMatrix<double>;
  Sparse A(n, n);
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(4 * n);
  const double h = 0.5 * dt;
  for (int i = 0; i < n; ++i) {
    trips.emplace_back(i, i, 1.0 - h * (-M.diag[i]));
    for (int k = 0; k < 3; ++k) trips.emplace_back(i, M.cols[i][k], -h * M.offdiag[i][k]);
  }
  A.setFromTriplets(trips.begin(), trips.end());

  const std::vector<double> md = M.apply(D.data());
  Eigen::VectorXd rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = D[i] + h * md[i];

  Eigen::BiCGSTAB<Sparse, Eigen::DiagonalPreconditioner<double>> solver;
  solver.setTolerance(cfg.linear_tolerance);
  solver.setMaxIterations(cfg.linear_max_iters);
  solver.compute(A);
  Eigen::VectorXd x = solver.solveWithGuess(rhs, rhs);
  if (solver.info() != Eigen::Success)
    throw StepError("depth solve did not converge: relative residual " +
                    std::to_string(solver.error()) + " after " +
                    std::to_string(solver.iterations()) + " iterations");

  CellField out(n);
  for (int i = 0; i < n; ++i) out[i] = x[i];
  return out;
}

ModelState step_cayley(const Mesh& m, const ModelState& state, const StaticFields& st,
                       const IntegratorConfig& cfg, StepStats* stats) {
  const double dt = cfg.dt;
  const AdvectionGenerator M = assemble_generator(m, state.V);
  const CellField D1 = cayley_depth_update(M, state.D, dt, cfg);

  const EdgeField adv_t = adv_term(m, state.V, state.D, st.Rbar);
  const EdgeField kin_t = kinetic_term(m, state.V);
  const EdgeField G1 = grad_pressure_term(m, D1, st.B, st.g);

  EdgeField Vk = state.V;
  int iters = 0;
  for (;;) {
    const EdgeField adv_k = adv_term(m, Vk, D1, st.Rbar);
    const EdgeField kin_k = kinetic_term(m, Vk);
    EdgeField Vnext(m.n_edges());
    for (int e = 0; e < m.n_edges(); ++e)
      Vnext[e] = state.V[e] + dt * (-0.5 * (adv_k[e] + adv_t[e]) +
                                    0.5 * (kin_k[e] + kin_t[e]) - G1[e]);
    const double inc = max_norm_diff(Vnext.data(), Vk.data());
    Vk = std::move(Vnext);
    ++iters;
    if (inc < cfg.fp_tolerance) break;
    if (iters >= cfg.fp_max_iters)
      throw StepError("momentum fixed point did not converge: last increment " +
                      std::to_string(inc));
  }
  if (stats) stats->fp_iterations = iters;

  return {std::move(Vk), D1, state.time + dt};
}

ModelState step_crank_nicolson(const Mesh& m, const ModelState& state, const StaticFields& st,
                               const IntegratorConfig& cfg, StepStats* stats) {
  const double dt = cfg.dt;
  const CellField div_t = mass_flux_div(m, state.V, state.D);
  const EdgeField adv_t = adv_term(m, state.V, state.D, st.Rbar);
  const EdgeField kin_t = kinetic_term(m, state.V);

  EdgeField Vk = state.V;
  CellField Dk = state.D;
  int iters = 0;
  for (;;) {
    const CellField div_k = mass_flux_div(m, Vk, Dk);
    CellField Dnext(m.n_cells());
    for (int i = 0; i < m.n_cells(); ++i)
      Dnext[i] = state.D[i] - 0.5 * dt * (div_k[i] + div_t[i]);

    const EdgeField adv_k = adv_term(m, Vk, Dnext, st.Rbar);
    const EdgeField kin_k = kinetic_term(m, Vk);
    const EdgeField Gk = grad_pressure_term(m, Dnext, st.B, st.g);
    EdgeField Vnext(m.n_edges());
    for (int e = 0; e < m.n_edges(); ++e)
      Vnext[e] = state.V[e] + dt * (-0.5 * (adv_k[e] + adv_t[e]) +
                                    0.5 * (kin_k[e] + kin_t[e]) - Gk[e]);

    const double inc =
        max_norm_diff(Vnext.data(), Vk.data()) + max_norm_diff(Dnext.data(), Dk.data());
    Vk = std::move(Vnext);
    Dk = std::move(Dnext);
    ++iters;
    if (inc < cfg.fp_tolerance) break;
    if (iters >= cfg.fp_max_iters)
      throw StepError("Crank-Nicolson fixed point did not converge: last increment " +
                      std::to_string(inc));
  }
  if (stats) stats->fp_iterations = iters;

  return {std::move(Vk), std::move(Dk), state.time + dt};
}

ModelState step(const Mesh& m, const ModelState& state, const StaticFields& st,
                const IntegratorConfig& cfg, StepStats* stats) {
  return cfg.scheme == Scheme::cayley ? step_cayley(m, state, st, cfg, stats)
                                      : step_crank_nicolson(m, state, st, cfg, stats);
}

}  // namespace icosw
