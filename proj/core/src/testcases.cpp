#include "icosw/testcases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace icosw {

using std::numbers::pi;

Case case_from_name(const std::string& name) {
  if (name == "lake_at_rest") return Case::lake_at_rest;
  if (name == "geostrophic") return Case::geostrophic;
  if (name == "mountain") return Case::mountain;
  if (name == "rossby_haurwitz") return Case::rossby_haurwitz;
  throw std::invalid_argument("unknown case: " + name);
}

std::string case_name(Case c) {
  switch (c) {
    case Case::lake_at_rest: return "lake_at_rest";
    case Case::geostrophic: return "geostrophic";
    case Case::mountain: return "mountain";
    case Case::rossby_haurwitz: return "rossby_haurwitz";
  }
  return "?";
}

CaseSpec CaseSpec::make_default(Case c) {
  CaseSpec s;
  s.id = c;
  switch (c) {
    case Case::lake_at_rest:
      s.h0 = 5960.0;
      s.run_days = 15.0;
      break;
    case Case::geostrophic:
      s.h0 = 2.94e4 / s.gravity;
      s.u0 = 2.0 * pi * s.radius_m / (12.0 * 86400.0);
      s.run_days = 12.0;
      break;
    case Case::mountain:
      s.h0 = 5960.0;
      s.u0 = 20.0;
      s.run_days = 15.0;
      break;
    case Case::rossby_haurwitz:
      s.h0 = 8000.0;
      s.run_days = 14.0;
      break;
  }
  return s;
}

void lonlat(const Vec3& p, double& lon, double& lat) {
  const Vec3 u = normalized(p);
  lon = std::atan2(u.y, u.x);
  lat = std::asin(std::clamp(u.z, -1.0, 1.0));
}

Vec3 east_basis(const Vec3& p) {
  double lon, lat;
  lonlat(p, lon, lat);
  return {-std::sin(lon), std::cos(lon), 0.0};
}

Vec3 north_basis(const Vec3& p) {
  double lon, lat;
  lonlat(p, lon, lat);
  return {-std::sin(lat) * std::cos(lon), -std::sin(lat) * std::sin(lon), std::cos(lat)};
}

namespace {

/// Angular distance used by the mountain profiles, with periodic longitude.
double mountain_r(const Vec3& p, double lambda_c, double theta_c) {
  double lon, lat;
  lonlat(p, lon, lat);
  const double dlon = std::remainder(lon - lambda_c, 2.0 * pi);
  const double dlat = lat - theta_c;
  const double r2 = std::min((pi / 9.0) * (pi / 9.0), dlon * dlon + dlat * dlat);
  return std::sqrt(r2);
}

/// Zonal solid-body edge velocities shared by cases 2 and 3.
EdgeField zonal_velocity(const Mesh& m, double u0) {
  const double R = m.radius();
  return sample_edge_normal_velocity(m, [u0, R](const Vec3& p) {
    return Vec3{-u0 * p.y / R, u0 * p.x / R, 0.0};
  });
}

/// Depth for the zonally balanced flow, unit-sphere z coordinate.
CellField balanced_depth(const Mesh& m, const CaseSpec& s) {
  const double coef = (s.radius_m * s.omega * s.u0 + 0.5 * s.u0 * s.u0) / s.gravity;
  const double R = m.radius();
  return sample_cell_value(m, [&, R](const Vec3& p) {
    const double z = p.z / R;
    return s.h0 - coef * z * z;
  });
}

}  // namespace

CaseState init_lake_at_rest(const Mesh& m, const CaseSpec& spec) {
  CaseState cs;
  cs.statics.g = spec.gravity;
  cs.statics.Rbar = coriolis_setup(m, spec.omega);
  cs.statics.B = sample_cell_value(m, [&](const Vec3& p) {
    const double r = mountain_r(p, spec.lambda_c, spec.theta_c);
    return 2000.0 * std::exp(-std::pow(2.8 * 9.0 * r / pi, 2));
  });
  if (spec.noise_amplitude > 0.0) {
    std::mt19937_64 rng(spec.noise_seed);
    std::uniform_real_distribution<double> noise(-spec.noise_amplitude, spec.noise_amplitude);
    for (int i = 0; i < m.n_cells(); ++i) cs.statics.B[i] += noise(rng);
  }
  cs.state.V = EdgeField(m.n_edges(), 0.0);
  cs.state.D = CellField(m.n_cells());
  for (int i = 0; i < m.n_cells(); ++i) cs.state.D[i] = spec.h0 - cs.statics.B[i];
  return cs;
}

CaseState init_geostrophic(const Mesh& m, const CaseSpec& spec) {
  CaseState cs;
  cs.statics.g = spec.gravity;
  cs.statics.Rbar = coriolis_setup(m, spec.omega);
  cs.statics.B = CellField(m.n_cells(), 0.0);
  cs.state.V = zonal_velocity(m, spec.u0);
  cs.state.D = balanced_depth(m, spec);
  return cs;
}

CaseState init_mountain(const Mesh& m, const CaseSpec& spec) {
  CaseState cs;
  cs.statics.g = spec.gravity;
  cs.statics.Rbar = coriolis_setup(m, spec.omega);
  cs.statics.B = sample_cell_value(m, [&](const Vec3& p) {
    const double r = mountain_r(p, spec.lambda_c, spec.theta_c);
    return 2000.0 * (1.0 - 9.0 * r / pi);
  });
  cs.state.V = zonal_velocity(m, spec.u0);
  cs.state.D = balanced_depth(m, spec);
  return cs;
}

CaseState init_rossby_haurwitz(const Mesh& m, const CaseSpec& spec) {
  const double K = spec.rh_K;
  const double kap = spec.rh_wavenumber;
  const double R = spec.radius_m;
  const double Om = spec.omega;

  auto uv = [&](double lon, double lat, double& u, double& v) {
    const double c = std::cos(lat), s = std::sin(lat);
    u = R * K * c +
        R * K * std::pow(c, kap - 1.0) * (kap * s * s - c * c) * std::cos(kap * lon);
    v = -R * K * kap * std::pow(c, kap - 1.0) * s * std::sin(kap * lon);
  };

  CaseState cs;
  cs.statics.g = spec.gravity;
  cs.statics.Rbar = coriolis_setup(m, spec.omega);
  cs.statics.B = CellField(m.n_cells(), 0.0);

  cs.state.V = sample_edge_normal_velocity(m, [&](const Vec3& p) {
    double lon, lat, u, v;
    lonlat(p, lon, lat);
    uv(lon, lat, u, v);
    return u * east_basis(p) + v * north_basis(p);
  });

  cs.state.D = sample_cell_value(m, [&](const Vec3& p) {
    double lon, lat;
    lonlat(p, lon, lat);
    const double c = std::cos(lat);
    const double A = 0.5 * K * (2.0 * Om + K) * c * c +
                     0.25 * K * K *
                         ((kap + 1.0) * std::pow(c, 2.0 * kap + 2.0) +
                          (2.0 * kap * kap - kap - 2.0) * std::pow(c, 2.0 * kap) -
                          2.0 * kap * kap * std::pow(c, 2.0 * kap - 2.0));
    const double Bc = 2.0 * (Om + K) * K / ((kap + 1.0) * (kap + 2.0)) * std::pow(c, kap) *
                      ((kap * kap + 2.0 * kap + 2.0) - (kap + 1.0) * (kap + 1.0) * c * c);
    const double Cc =
        0.25 * K * K * std::pow(c, 2.0 * kap) * ((kap + 1.0) * c * c - (kap + 2.0));
    return spec.h0 + (R * R * A + R * R * Bc * std::cos(kap * lon) +
                      R * R * Cc * std::cos(2.0 * kap * lon)) /
                         spec.gravity;
  });
  return cs;
}

CaseState init_case(const Mesh& m, const CaseSpec& spec) {
  switch (spec.id) {
    case Case::lake_at_rest: return init_lake_at_rest(m, spec);
    case Case::geostrophic: return init_geostrophic(m, spec);
    case Case::mountain: return init_mountain(m, spec);
    case Case::rossby_haurwitz: return init_rossby_haurwitz(m, spec);
  }
  throw std::logic_error("unreachable");
}

}  // namespace icosw
