#pragma once

#include "icosw/fields.hpp"
#include "icosw/mesh.hpp"

namespace icosw {

/// Least-squares reconstruction of a tangent velocity vector per cell from
/// the three edge-normal components. Linear in V.
std::vector<Vec3> reconstruct_cell_velocity(const Mesh& m, const EdgeField& V);

/// Magnitudes |u| per cell of the reconstruction; used by the velocity
/// error norms.
CellField cell_speed(const Mesh& m, const EdgeField& V);

}  // namespace icosw
