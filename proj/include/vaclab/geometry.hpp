#pragma once

// Plain value types used everywhere: 3-vectors, spacetime points and
// 3x3 matrices. No dynamic allocation, no shared state.

#include <algorithm>
#include <array>
#include <cmath>

namespace vaclab {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

[[nodiscard]] inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
[[nodiscard]] inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
[[nodiscard]] inline Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
[[nodiscard]] inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
[[nodiscard]] inline Vec3 operator*(Vec3 a, double s) { return s * a; }
[[nodiscard]] inline Vec3 operator/(Vec3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }
inline Vec3& operator+=(Vec3& a, Vec3 b) { a = a + b; return a; }

[[nodiscard]] inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
[[nodiscard]] inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
[[nodiscard]] inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
[[nodiscard]] inline double norm_inf(Vec3 a) {
  return std::max({std::abs(a.x), std::abs(a.y), std::abs(a.z)});
}
[[nodiscard]] inline bool is_finite(Vec3 a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

[[nodiscard]] inline double component(Vec3 a, int i) { return i == 0 ? a.x : (i == 1 ? a.y : a.z); }
inline void set_component(Vec3& a, int i, double v) {
  if (i == 0) a.x = v; else if (i == 1) a.y = v; else a.z = v;
}

/// A spacetime sample point; coordinates are stored as real (x, y, z, t).
struct Point4 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double t = 0.0;

  [[nodiscard]] Vec3 spatial() const { return {x, y, z}; }
};

[[nodiscard]] inline Point4 at(Vec3 r, double t = 0.0) { return {r.x, r.y, r.z, t}; }

/// Row-major 3x3 matrix. Entry (i, j) of a jacobian is d F_i / d x_j.
struct Mat3 {
  std::array<double, 9> a{};

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(3 * i + j)]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(3 * i + j)]; }

  [[nodiscard]] double trace() const { return a[0] + a[4] + a[8]; }
};

[[nodiscard]] inline Mat3 operator+(const Mat3& p, const Mat3& q) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.a[i] = p.a[i] + q.a[i];
  return r;
}

[[nodiscard]] inline Mat3 operator*(double s, const Mat3& p) {
  Mat3 r;
  for (std::size_t i = 0; i < 9; ++i) r.a[i] = s * p.a[i];
  return r;
}

[[nodiscard]] inline double max_abs(const Mat3& p) {
  double m = 0.0;
  for (double v : p.a) m = std::max(m, std::abs(v));
  return m;
}

[[nodiscard]] inline double max_asymmetry(const Mat3& p) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) m = std::max(m, std::abs(p(i, j) - p(j, i)));
  return m;
}

}  // namespace vaclab
