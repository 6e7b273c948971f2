#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icosw/io.hpp"
#include "icosw/testcases.hpp"
#include "icosw/timeint.hpp"

namespace icosw {

struct RunConfig {
  CaseSpec spec = CaseSpec::make_default(Case::geostrophic);
  int level = 5;
  bool optimize_mesh = false;
  IntegratorConfig integ;
  int diag_every = 10;        // steps between diagnostics rows
  int dump_every = 0;         // steps between VTK field dumps (0: first/last only)
  std::string out_dir = "out";
  bool compare_initial = true;  // write D/|V| error norms vs the initial state
};

struct RunResult {
  bool ok = false;
  std::string error;              // set when a step failed
  long steps_completed = 0;
  int max_fp_iterations = 0;
  std::vector<DiagnosticsRecord> records;
  std::string diagnostics_path;
  std::string checkpoint_path;
};

/// Runs one simulation: diagnostics CSV every diag_every steps, VTK dumps,
/// and a final (or last-good, on failure) checkpoint under out_dir. A step
/// failure additionally writes a machine-readable error.json.
RunResult run_simulation(const RunConfig& cfg, const Mesh& mesh);
RunResult run_simulation(const RunConfig& cfg);  // builds the mesh itself

enum class OperatorKind { grad, div, curl };
OperatorKind operator_from_name(const std::string& name);

struct ConvergenceRow {
  int level = 0;
  double h_max = 0.0;     // max primal edge length
  double error = 0.0;     // relative Linf vs the analytic projected operator
  double observed_order = 0.0;  // log2(e_prev / e_this), 0 for the first row
};

/// Refinement sweep of one discrete operator against its analytic projected
/// counterpart, with the standard trigonometric/polynomial test fields.
/// When err_field_out is non-null it receives the per-entity absolute error
/// at the finest level (grid-imprint figure data).
std::vector<ConvergenceRow> run_operator_convergence(const std::vector<int>& levels,
                                                     OperatorKind which,
                                                     std::vector<double>* err_field_out = nullptr);

void write_convergence_csv(const std::string& path, const std::vector<ConvergenceRow>& rows);

struct ComparisonResult {
  RunResult cayley;
  RunResult crank_nicolson;
};

/// Runs both integrators with identical settings and writes paired
/// diagnostics series (<out_dir>/cayley.csv, <out_dir>/crank_nicolson.csv).
ComparisonResult run_scheme_comparison(const RunConfig& cfg);

/// Least-squares line y = a + b x; returns (intercept, slope, residual_std).
struct LinearFit {
  double intercept = 0.0;
  double slope = 0.0;
  double residual_std = 0.0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

/// Amplitude of zonal wavenumber k of a cell field on a latitude band,
/// computed by direct projection onto e^{-i k lambda} over cells with
/// |lat - lat0| < half_width.
double zonal_wavenumber_amplitude(const Mesh& m, const CellField& f, int k, double lat0,
                                  double half_width);

}  // namespace icosw
