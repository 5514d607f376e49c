#pragma once

#include <algorithm>
#include <cmath>

#include "mutlab/errors.hpp"
#include "mutlab/rng.hpp"

namespace mutlab {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 normalized() const {
    double n = norm();
    return {x / n, y / n, z / n};
  }
};

// Unit quaternion w + x i + y j + z k; SU(2) element.
struct Quat {
  double w = 1, x = 0, y = 0, z = 0;

  static Quat identity() { return {1, 0, 0, 0}; }
  static Quat from_vec(double w, const Vec3& v) { return {w, v.x, v.y, v.z}; }

  Quat operator*(const Quat& q) const {
    return {w * q.w - x * q.x - y * q.y - z * q.z,
            w * q.x + x * q.w + y * q.z - z * q.y,
            w * q.y - x * q.z + y * q.w + z * q.x,
            w * q.z + x * q.y - y * q.x + z * q.w};
  }
  Quat operator-() const { return {-w, -x, -y, -z}; }
  Quat conjugate() const { return {w, -x, -y, -z}; }
  Quat inverse() const { return conjugate(); }  // unit quaternions only

  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
  Quat normalized() const {
    double n = norm();
    return {w / n, x / n, y / n, z / n};
  }
  Vec3 imag() const { return {x, y, z}; }
  double dot(const Quat& q) const { return w * q.w + x * q.x + y * q.y + z * q.z; }
};

inline Quat quat_i() { return {0, 1, 0, 0}; }
inline Quat quat_j() { return {0, 0, 1, 0}; }
inline Quat quat_k() { return {0, 0, 0, 1}; }

inline double quat_dist(const Quat& a, const Quat& b) {
  double dw = a.w - b.w, dx = a.x - b.x, dy = a.y - b.y, dz = a.z - b.z;
  return std::sqrt(dw * dw + dx * dx + dy * dy + dz * dz);
}

// SO(3) distance through the double cover
inline double projective_dist(const Quat& a, const Quat& b) {
  return std::min(quat_dist(a, b), quat_dist(a, -b));
}

// exp(theta n) = cos(theta) + sin(theta) n for a unit imaginary n
inline Quat exp_su2(const Vec3& v) {
  double t = v.norm();
  if (t < 1e-300) return Quat::identity();
  double s = std::sin(t) / t;
  return {std::cos(t), s * v.x, s * v.y, s * v.z};
}

// inverse of exp_su2 on |theta| < pi; throws at the antipode -1
inline Vec3 log_su2(const Quat& q) {
  double im = q.imag().norm();
  if (im < 1e-12 && q.w < 0) throw LogAtAntipodeError("log undefined at -1");
  if (im < 1e-300) return {0, 0, 0};
  double theta = std::atan2(im, q.w);
  double s = theta / im;
  return {s * q.x, s * q.y, s * q.z};
}

inline double trace_su2(const Quat& q) { return 2 * q.w; }
// trace of the induced rotation
inline double trace_so3(const Quat& q) { return 4 * q.w * q.w - 1; }

inline Quat quat_pow(Quat q, int k) {
  if (k < 0) {
    q = q.inverse();
    k = -k;
  }
  Quat r = Quat::identity();
  for (int i = 0; i < k; ++i) r = r * q;
  return r;
}

inline Quat haar_su2(Rng& rng) {
  Quat q;
  do {
    q = {rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
  } while (q.norm() < 1e-8);
  return q.normalized();
}

}  // namespace mutlab
