#pragma once

#include <utility>

#include "icosw/dynamics.hpp"

namespace icosw {

/// Total energy: kinetic sum over undirected edges plus potential over cells,
///   E = sum_e (1/2) Dbar h f V^2 + sum_i (g/2)(D_i + B_i)^2 Omega_ii.
double total_energy(const Mesh& m, const EdgeField& V, const CellField& D, const CellField& B,
                    double g);

/// Potential enstrophy: PE = sum_e (1/2) |zeta_e| h_e q_e^2, with the
/// K-weighted dual depth h_e = sum_k K^e_k D_k and potential vorticity
/// q_e = (omega_e / |zeta_e|) / h_e. The dual-depth weighting is a
/// repo-defined diagnostic choice.
double potential_enstrophy(const Mesh& m, const EdgeField& V, const CellField& D,
                           const EdgeField& Rbar);

/// mass = sum_i Omega_ii D_i.
double mass(const Mesh& m, const CellField& D);

/// Global sum of the absolute-vorticity loop sums over all dual cells.
double potential_circulation(const Mesh& m, const EdgeField& V, const EdgeField& Rbar);

/// Relative error norms, as used for reporting:
///   Linf = max|u - u0| / max|u0|
///   L2   = sqrt(sum (Omega (u-u0))^2) / sqrt(sum Omega u0^2)
/// Note the asymmetric Omega weighting of the L2 norm; it is intentional.
/// weights must match the entity set of u and u0.
std::pair<double, double> error_norms(const std::vector<double>& u,
                                      const std::vector<double>& u0,
                                      const std::vector<double>& weights);

struct DiagnosticsRecord {
  long step = 0;
  double time = 0.0;
  double mass = 0.0;
  double energy = 0.0;
  double pot_enstrophy = 0.0;
  double pot_circulation = 0.0;
  // relative errors vs the initial values of the conserved quantities
  double mass_err = 0.0;
  double energy_err = 0.0;
  double enstrophy_err = 0.0;
  double circulation_err = 0.0;
  // relative errors vs a reference state (filled when one is provided)
  double depth_linf = 0.0, depth_l2 = 0.0;
  double vel_linf = 0.0, vel_l2 = 0.0;
};

}  // namespace icosw
