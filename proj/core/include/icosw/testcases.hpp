#pragma once

#include <cstdint>
#include <string>

#include "icosw/dynamics.hpp"

namespace icosw {

enum class Case { lake_at_rest, geostrophic, mountain, rossby_haurwitz };

Case case_from_name(const std::string& name);
std::string case_name(Case c);

/// Benchmark-case parameters. The physical constants are shared by all cases.
struct CaseSpec {
  Case id = Case::geostrophic;

  // physical constants, fixed for all simulations unless overridden
  double radius_m = 6.37122e6;   // R
  double omega = 7.292e-5;       // planetary rotation rate [1/s]
  double gravity = 9.80616;      // g [m/s^2]

  // case parameters (defaults per case are set by make_default)
  double h0 = 0.0;               // [m] (geostrophic: g*h0 = 2.94e4 m^2/s^2)
  double u0 = 0.0;               // [m/s]
  double lambda_c = 4.71238898038468986;  // 3*pi/2
  double theta_c = 0.52359877559829887;   // pi/6
  double rh_K = 7.848e-6;        // Rossby-Haurwitz amplitude [1/s]
  int rh_wavenumber = 4;
  double noise_amplitude = 0.0;  // [m], lake-at-rest topography noise
  std::uint64_t noise_seed = 0;

  double run_days = 15.0;
  double dt = 100.0;

  static CaseSpec make_default(Case c);
};

struct CaseState {
  ModelState state;
  StaticFields statics;
};

CaseState init_lake_at_rest(const Mesh& m, const CaseSpec& spec);
CaseState init_geostrophic(const Mesh& m, const CaseSpec& spec);
CaseState init_mountain(const Mesh& m, const CaseSpec& spec);
CaseState init_rossby_haurwitz(const Mesh& m, const CaseSpec& spec);

CaseState init_case(const Mesh& m, const CaseSpec& spec);

/// Longitude/latitude of a point, with lon in (-pi, pi].
void lonlat(const Vec3& p, double& lon, double& lat);

/// Local east/north unit vectors at a point on the sphere.
Vec3 east_basis(const Vec3& p);
Vec3 north_basis(const Vec3& p);

}  // namespace icosw
