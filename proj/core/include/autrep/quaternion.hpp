#pragma once

#include <cmath>

namespace autrep {

/// Unit quaternion = element of SU(2); the trace of the corresponding
/// SU(2) matrix is 2w. Products renormalize to hold |q| = 1 to 1e-12.
struct Quat {
  double w = 1, x = 0, y = 0, z = 0;

  static Quat identity() { return {}; }

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }

  Quat normalized() const {
    double n = norm();
    return {w / n, x / n, y / n, z / n};
  }

  Quat conj() const { return {w, -x, -y, -z}; }

  double trace() const { return 2 * w; }

  friend double dot(const Quat& a, const Quat& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
  }

  friend Quat operator*(const Quat& a, const Quat& b) {
    Quat q{a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
           a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
           a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
           a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    return q.normalized();
  }
};

/// Geodesic distance on SU(2) = S^3 (does not identify +-1).
inline double su2_distance(const Quat& a, const Quat& b) {
  double c = dot(a, b);
  if (c > 1) c = 1;
  if (c < -1) c = -1;
  return std::acos(c);
}

/// Distance on SO(3) = SU(2)/{+-1}: accounts for the center.
inline double so3_distance(const Quat& a, const Quat& b) {
  double c = std::fabs(dot(a, b));
  if (c > 1) c = 1;
  return 2 * std::acos(c);
}

}  // namespace autrep
