#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "icosw/dynamics.hpp"

namespace icosw {

enum class Scheme { cayley, crank_nicolson };

struct IntegratorConfig {
  Scheme scheme = Scheme::cayley;
  double dt = 100.0;                // [s]
  double fp_tolerance = 1e-10;      // max-norm stop for the fixed-point loops
  int fp_max_iters = 50;
  double linear_tolerance = 1e-12;  // relative residual for the depth solve
  int linear_max_iters = 1000;
};

struct StepError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sparse generator M of the depth evolution, dD/dt = M D = -div(V, D).
/// Per row i: off-diagonal entries A_ij = -f_ij V_ij / (2 Omega_ii) for the
/// three neighbors, diagonal -A_ii = -(1/2) div(V)_i.
struct AdvectionGenerator {
  int n = 0;
  std::vector<double> diag;                      // -A_ii
  std::vector<std::array<int, 3>> cols;          // neighbor cell ids
  std::vector<std::array<double, 3>> offdiag;    // A_ij

  std::vector<double> apply(const std::vector<double>& d) const;
};

AdvectionGenerator assemble_generator(const Mesh& m, const EdgeField& V);

/// Solves (I - dt/2 M) D+ = (I + dt/2 M) D to the configured relative
/// residual. Throws StepError on solver non-convergence.
CellField cayley_depth_update(const AdvectionGenerator& M, const CellField& D, double dt,
                              const IntegratorConfig& cfg);

struct StepStats {
  int fp_iterations = 0;
  int linear_iterations = 0;
  double linear_residual = 0.0;
};

ModelState step_cayley(const Mesh& m, const ModelState& state, const StaticFields& st,
                       const IntegratorConfig& cfg, StepStats* stats = nullptr);

ModelState step_crank_nicolson(const Mesh& m, const ModelState& state, const StaticFields& st,
                               const IntegratorConfig& cfg, StepStats* stats = nullptr);

ModelState step(const Mesh& m, const ModelState& state, const StaticFields& st,
                const IntegratorConfig& cfg, StepStats* stats = nullptr);

}  // namespace icosw
