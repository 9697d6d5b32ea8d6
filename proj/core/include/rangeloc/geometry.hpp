#pragma once

#include <cmath>

namespace rangeloc {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
// Euclidean wedge scalar a ^ b.
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 normalized(Vec2 a) { return a / norm(a); }
// Counter-clockwise quarter turn.
inline Vec2 rot90(Vec2 a) { return {-a.y, a.x}; }

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator*(Vec3 a, double s) { return s * a; }
inline Vec3 operator/(Vec3 a, double s) { return {a.x / s, a.y / s, a.z / s}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b)
{
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline double distance(Vec3 a, Vec3 b) { return norm(a - b); }
inline Vec3 normalized(Vec3 a) { return a / norm(a); }

// Vector of R^{2,1}, signature (+,+,-). The last slot is time.
struct SpacetimeVec3 {
  double x = 0.0;
  double y = 0.0;
  double t = 0.0;

  static constexpr SpacetimeVec3 e1() { return {1.0, 0.0, 0.0}; }
  static constexpr SpacetimeVec3 e2() { return {0.0, 1.0, 0.0}; }
  static constexpr SpacetimeVec3 e3() { return {0.0, 0.0, 1.0}; }
};

inline SpacetimeVec3 operator+(SpacetimeVec3 a, SpacetimeVec3 b) { return {a.x + b.x, a.y + b.y, a.t + b.t}; }
inline SpacetimeVec3 operator-(SpacetimeVec3 a, SpacetimeVec3 b) { return {a.x - b.x, a.y - b.y, a.t - b.t}; }
inline SpacetimeVec3 operator*(double s, SpacetimeVec3 a) { return {s * a.x, s * a.y, s * a.t}; }
inline SpacetimeVec3 operator/(SpacetimeVec3 a, double s) { return {a.x / s, a.y / s, a.t / s}; }
inline SpacetimeVec3 lift(Vec2 p, double t) { return {p.x, p.y, t}; }
inline Vec2 spatial(SpacetimeVec3 v) { return {v.x, v.y}; }

// Vector of R^{3,1}, signature (+,+,+,-).
struct SpacetimeVec4 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double t = 0.0;

  static constexpr SpacetimeVec4 e1() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr SpacetimeVec4 e2() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr SpacetimeVec4 e3() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr SpacetimeVec4 e4() { return {0.0, 0.0, 0.0, 1.0}; }
};

inline SpacetimeVec4 operator+(SpacetimeVec4 a, SpacetimeVec4 b) { return {a.x + b.x, a.y + b.y, a.z + b.z, a.t + b.t}; }
inline SpacetimeVec4 operator-(SpacetimeVec4 a, SpacetimeVec4 b) { return {a.x - b.x, a.y - b.y, a.z - b.z, a.t - b.t}; }
inline SpacetimeVec4 operator*(double s, SpacetimeVec4 a) { return {s * a.x, s * a.y, s * a.z, s * a.t}; }
inline SpacetimeVec4 lift(Vec3 p, double t) { return {p.x, p.y, p.z, t}; }
inline Vec3 spatial(SpacetimeVec4 v) { return {v.x, v.y, v.z}; }

double minkowski_inner(SpacetimeVec3 u, SpacetimeVec3 v);
double minkowski_norm2(SpacetimeVec3 u);

// *(u ^ v) with *(e1^e2) = -e3, *(e1^e3) = -e2, *(e2^e3) = e1.
// Satisfies <hodge_cross(u, v), w> = triple_form(u, v, w).
SpacetimeVec3 hodge_cross(SpacetimeVec3 u, SpacetimeVec3 v);

// *(u ^ v ^ w) = det[u; v; w], so triple_form(e1, e2, e3) = +1.
double triple_form(SpacetimeVec3 u, SpacetimeVec3 v, SpacetimeVec3 w);

double minkowski_inner(SpacetimeVec4 u, SpacetimeVec4 v);
double minkowski_norm2(SpacetimeVec4 u);

// *(u ^ v ^ w) in R^{3,1}: the vector n with <n, x> = det[u; v; w; x].
SpacetimeVec4 hodge_triple(SpacetimeVec4 u, SpacetimeVec4 v, SpacetimeVec4 w);

// *(u ^ v ^ w ^ x) = det[u; v; w; x].
double quad_form(SpacetimeVec4 u, SpacetimeVec4 v, SpacetimeVec4 w, SpacetimeVec4 x);

} // namespace rangeloc
