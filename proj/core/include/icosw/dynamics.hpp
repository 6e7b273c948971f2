#pragma once

#include "icosw/fields.hpp"
#include "icosw/mesh.hpp"
#include "icosw/operators.hpp"

namespace icosw {

/// Prognostic state: edge-normal velocities and cell depths.
struct ModelState {
  EdgeField V;   // [m/s]
  CellField D;   // [m]
  double time = 0.0;
};

/// Time-independent inputs of a run.
struct StaticFields {
  CellField B;     // bottom topography [m]
  EdgeField Rbar;  // Coriolis vector-potential samples
  double g = 0.0;  // gravity [m/s^2]
};

/// Nonlinear advection (Coriolis + vorticity transport) term of the momentum
/// equation. Groups at zeta_- and zeta_+ carry a minus resp. plus sign.
EdgeField adv_term(const Mesh& m, const EdgeField& V, const CellField& D, const EdgeField& Rbar);

/// Kinetic-energy gradient term K(V).
EdgeField kinetic_term(const Mesh& m, const EdgeField& V);

/// G(D)_ij = g (D_j + B_j - D_i - B_i) / h_ij.
EdgeField grad_pressure_term(const Mesh& m, const CellField& D, const CellField& B, double g);

/// div(V, D)_i = (1/Omega_ii) sum_l f_il V_il Dbar_il, outward-positive.
CellField mass_flux_div(const Mesh& m, const EdgeField& V, const CellField& D);

/// Full momentum tendency dV/dt = -Adv(V,D) + K(V) - G(D).
EdgeField momentum_tendency(const Mesh& m, const EdgeField& V, const CellField& D,
                            const StaticFields& st);

}  // namespace icosw
