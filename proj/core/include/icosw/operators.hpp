#pragma once

#include <array>
#include <functional>

#include "icosw/fields.hpp"
#include "icosw/mesh.hpp"

namespace icosw {

/// Mimetic discrete operators on the primal/dual mesh pair. All are pure
/// functions of an immutable mesh and the input field.

/// (Grad g)_ij = (g_j - g_i) / h_ij, canonical orientation.
EdgeField grad_num(const Mesh& m, const CellField& g);

/// (Div V)_i = (1/Omega_ii) sum_l f_il V_il, fluxes positive out of T_i.
CellField div_num(const Mesh& m, const EdgeField& V);

/// (Curl V)_e = (1/|zeta_e|) sum_{mn in boundary} h_mn V_mn, counterclockwise.
DualField curl_num(const Mesh& m, const EdgeField& V);

/// Flat operator: A_flat_ij = -h_ij V_ij (skew as a matrix via the
/// EdgeField orientation convention).
EdgeField flat(const Mesh& m, const EdgeField& V);

/// Coriolis samples R_bar_ij = R(midpoint) . n_ij with R the solid-body
/// vector potential of the planetary rotation, scaled to the sphere radius.
EdgeField coriolis_setup(const Mesh& m, double omega);

/// Absolute-vorticity loop sums omega_e = sum h_mn (V_mn + Rbar_mn) per dual
/// cell (NOT area-normalized; divide by |zeta_e| for the vorticity density).
DualField absolute_vorticity(const Mesh& m, const EdgeField& V, const EdgeField& Rbar);

/// Analytic surface operators via the tangent-plane projection
/// P_x = I - N N^T; used to verify the discrete operators.
struct AnalyticSurfaceOperators {
  /// grad g(x) = P_x grad3(x) from the Euclidean gradient of an extension.
  static Vec3 grad(const Vec3& x, const VectorFn& grad3);

  using JacobianFn = std::function<std::array<std::array<double, 3>, 3>(const Vec3&)>;

  /// div u(x) = tr(P_x J) with J_ab = d_a u_b of an extension.
  static double div(const Vec3& x, const JacobianFn& jac);

  /// curl u(x) = <(P_x grad) x u, N_x>.
  static double curl(const Vec3& x, const JacobianFn& jac);
};

}  // namespace icosw
