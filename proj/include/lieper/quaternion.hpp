#pragma once

#include <array>
#include <cmath>

namespace lieper {

using V3 = std::array<double, 3>;

inline V3 v3_add(const V3& a, const V3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
inline V3 v3_sub(const V3& a, const V3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
inline V3 v3_scale(double s, const V3& a) { return {s * a[0], s * a[1], s * a[2]}; }
inline double v3_dot(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline V3 v3_cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline double v3_norm(const V3& a) { return std::sqrt(v3_dot(a, a)); }

struct Quat {
  double w = 1, x = 0, y = 0, z = 0;
};

inline Quat qmul(const Quat& a, const Quat& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}
inline Quat qconj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }
inline Quat qadd(const Quat& a, const Quat& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}
inline Quat qscale(double s, const Quat& a) { return {s * a.w, s * a.x, s * a.y, s * a.z}; }
inline double qnorm(const Quat& a) {
  return std::sqrt(a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z);
}
inline Quat qnormalize(const Quat& a) { return qscale(1.0 / qnorm(a), a); }
inline Quat qpure(const V3& v) { return {0.0, v[0], v[1], v[2]}; }
inline V3 qim(const Quat& a) { return {a.x, a.y, a.z}; }

// exp of the pure quaternion with coordinates v
inline Quat qexp_pure(const V3& v) {
  double n = v3_norm(v);
  if (n < 1e-300) return {1, v[0], v[1], v[2]};
  double s = std::sin(n) / n;
  return {std::cos(n), s * v[0], s * v[1], s * v[2]};
}

// principal log of a unit quaternion, as pure-part coordinates
inline V3 qlog_unit(const Quat& q) {
  V3 im = qim(q);
  double n = v3_norm(im);
  if (n < 1e-300) return {0, 0, 0};
  double ang = std::atan2(n, q.w);
  return v3_scale(ang / n, im);
}

// Im(conj(center) * d), the value of the left logarithmic derivative when d is
// the derivative of a unit-quaternion path at center
inline V3 qlog_derivative(const Quat& center, const Quat& d) {
  return qim(qmul(qconj(center), d));
}

} // namespace lieper
