#pragma once

#include <cmath>

namespace icosw {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline Vec3 normalized(const Vec3& v) { return v / norm(v); }

/// Geodesic arc length between two points on the sphere of radius r.
inline double arc_length(const Vec3& a, const Vec3& b, double r) {
  const Vec3 ua = normalized(a), ub = normalized(b);
  return r * std::atan2(norm(cross(ua, ub)), dot(ua, ub));
}

/// Area of the spherical triangle with vertices a, b, c (radius r),
/// via the tangent half-excess formula. Unsigned.
inline double spherical_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c, double r) {
  const Vec3 ua = normalized(a), ub = normalized(b), uc = normalized(c);
  const double num = std::fabs(dot(ua, cross(ub, uc)));
  const double den = 1.0 + dot(ua, ub) + dot(ub, uc) + dot(uc, ua);
  return 2.0 * std::atan2(num, den) * r * r;
}

}  // namespace icosw
