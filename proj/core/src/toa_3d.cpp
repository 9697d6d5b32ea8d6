#include "rangeloc/toa_3d.hpp"

#include "rangeloc/errors.hpp"
#include "rangeloc/kummer.hpp"
#include "rangeloc/tolerance.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace rangeloc {

namespace {

// Orthonormal frame of the receiver plane H with m1 as origin.
struct PlaneFrame {
  Vec3 origin;
  Vec3 e1;
  Vec3 e2;
  Vec3 n;

  Vec2 local(Vec3 p) const { return {dot(p - origin, e1), dot(p - origin, e2)}; }
  Vec3 global(Vec2 q, double z) const { return origin + q.x * e1 + q.y * e2 + z * n; }
};

PlaneFrame plane_frame(const SensorConfig& config)
{
  PlaneFrame f;
  f.origin = config.position(0);
  const Vec3 d21 = config.position(1) - f.origin;
  const Vec3 d31 = config.position(2) - f.origin;
  f.e1 = normalized(d21);
  f.e2 = normalized(d31 - dot(d31, f.e1) * f.e1);
  f.n = cross(f.e1, f.e2);
  return f;
}

void require_general3d(const SensorConfig& config)
{
  config.require_spatial(3);
  if (config.collinear()) throw Error(ErrorCode::DegenerateConfig, "receivers are collinear");
}

bool in_octant(RangeTriple T, double tol)
{
  return T.T1 >= -tol && T.T2 >= -tol && T.T3 >= -tol;
}

// D = D1(l0) in R^{3,1}, local coordinates (e1, e2 in H, e3 normal, e4 time):
// <D, D21> = |D21|^2 / 2, <D, D31> = |D31|^2 / 2, <D, e3> = 0, <D, e4> = T1.
SpacetimeVec4 plane_lift(const PlaneFrame& f, const SensorConfig& config, RangeTriple T)
{
  const Vec2 p2 = f.local(config.position(1));
  const Vec2 p3 = f.local(config.position(2));
  const SpacetimeVec4 D21{p2.x, p2.y, 0.0, T.T2 - T.T1};
  const SpacetimeVec4 D31{p3.x, p3.y, 0.0, T.T3 - T.T1};
  const SpacetimeVec4 e3 = SpacetimeVec4::e3();
  const SpacetimeVec4 e4 = SpacetimeVec4::e4();
  const SpacetimeVec4 basis[4] = {D21, D31, e3, e4};
  const double rhs[4] = {0.5 * minkowski_norm2(D21), 0.5 * minkowski_norm2(D31), 0.0, T.T1};
  SpacetimeVec4 D{};
  for (int k = 0; k < 4; ++k) {
    if (rhs[k] == 0.0) continue;
    const SpacetimeVec4 dual = hodge_triple(basis[(k + 1) % 4], basis[(k + 2) % 4], basis[(k + 3) % 4]);
    D = D + (rhs[k] / minkowski_inner(dual, basis[k])) * dual;
  }
  return D;
}

SolutionSet3D revolve(Vec3 m1, Vec3 m2, RangePair T)
{
  const double d21 = distance(m1, m2);
  const TwoRangeSplit s = split_two_ranges(d21, T);
  SolutionSet3D out;
  if (s.cls.verdict == Q2Verdict::Outside) return out;
  const Vec3 axis = (m2 - m1) / d21;
  const Vec3 center = m1 + s.a * axis;
  if (s.cls.verdict == Q2Verdict::Boundary) {
    out.kind = Fiber3DKind::One;
    out.points.push_back(center);
    return out;
  }
  CircleFiber c;
  c.center = center;
  c.radius = s.b;
  c.axis = axis;
  circle_frame(axis, c.u, c.w);
  out.kind = Fiber3DKind::Circle;
  out.circle = c;
  return out;
}

} // namespace

Vec3 CircleFiber::at(double angle) const
{
  return center + radius * (std::cos(angle) * u + std::sin(angle) * w);
}

const char* to_string(Fiber3DKind k)
{
  switch (k) {
  case Fiber3DKind::Empty: return "Empty";
  case Fiber3DKind::One: return "One";
  case Fiber3DKind::Pair: return "Pair";
  case Fiber3DKind::Circle: return "Circle";
  }
  return "Unknown";
}

const char* to_string(Solid3DVerdict v)
{
  switch (v) {
  case Solid3DVerdict::InteriorSolid: return "InteriorSolid";
  case Solid3DVerdict::OnSurface: return "OnSurface";
  case Solid3DVerdict::Outside: return "Outside";
  }
  return "Unknown";
}

void circle_frame(Vec3 axis, Vec3& u, Vec3& w)
{
  const double c[3] = {std::abs(axis.x), std::abs(axis.y), std::abs(axis.z)};
  int k = 0;
  for (int i = 1; i < 3; ++i)
    if (c[i] < c[k]) k = i;
  Vec3 e;
  (k == 0 ? e.x : k == 1 ? e.y : e.z) = 1.0;
  u = normalized(e - dot(e, axis) * axis);
  w = cross(axis, u);
}

std::vector<double> forward3d(const SensorConfig& config, Vec3 x)
{
  std::vector<double> out;
  for (int i = 0; i < config.size(); ++i) out.push_back(distance(x, config.position(i)));
  return out;
}

RangePair forward3d_r2(const SensorConfig& config, Vec3 x)
{
  config.require_spatial(2);
  return {distance(x, config.position(0)), distance(x, config.position(1))};
}

RangeTriple forward3d_r3(const SensorConfig& config, Vec3 x)
{
  config.require_spatial(3);
  return {distance(x, config.position(0)), distance(x, config.position(1)), distance(x, config.position(2))};
}

int jacobian3d_rank(const SensorConfig& config, Vec3 x)
{
  const int n = config.size();
  Eigen::MatrixXd J(n, 3);
  for (int i = 0; i < n; ++i) {
    const Vec3 r = x - config.position(i);
    const double d = norm(r);
    if (d <= tol::kLinear * config.d_max()) throw Error(ErrorCode::AtReceiver, "range map is not differentiable at a receiver");
    J.row(i) << r.x / d, r.y / d, r.z / d;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(J);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > 1e-9) ++rank;
  return rank;
}

SolutionSet3D invert3d_r2(const SensorConfig& config, RangePair T)
{
  config.require_spatial(2);
  return revolve(config.position(0), config.position(1), T);
}

Feasibility3DReport classify3d_r3(const SensorConfig& config, RangeTriple T)
{
  require_general3d(config);
  const PlaneFrame f = plane_frame(config);
  const std::array<Vec2, 3> m = {f.local(config.position(0)), f.local(config.position(1)), f.local(config.position(2))};
  const double d = config.d_max();
  const double scale = tol::scale_of(d, {T.T1, T.T2, T.T3});

  Feasibility3DReport rep;
  rep.quartic = kummer_quartic(m, T);
  rep.normalized = rep.quartic / std::pow(d, 6);
  rep.in_octant = in_octant(T, tol::kLinear * scale);
  // The quartic shrinks with the triangle area, so the band is set on the
  // squared height instead, which is independent of the receiver shape.
  const double z2 = -minkowski_norm2(plane_lift(f, config, T));
  const double band = tol::kSurface * scale * scale;
  if (!rep.in_octant || z2 < -band) {
    rep.verdict = Solid3DVerdict::Outside;
    rep.fiber = 0;
  } else if (z2 <= band) {
    rep.verdict = Solid3DVerdict::OnSurface;
    rep.fiber = 1;
  } else {
    rep.verdict = Solid3DVerdict::InteriorSolid;
    rep.fiber = 2;
  }
  return rep;
}

SolutionSet3D invert3d_r3(const SensorConfig& config, RangeTriple T)
{
  const Feasibility3DReport rep = classify3d_r3(config, T);
  if (rep.verdict == Solid3DVerdict::Outside)
    throw Error(ErrorCode::Infeasible, "range triple is outside the feasible solid");

  const PlaneFrame f = plane_frame(config);
  const SpacetimeVec4 D = plane_lift(f, config, T);

  SolutionSet3D out;
  const Vec2 l0{D.x, D.y};
  if (rep.verdict == Solid3DVerdict::OnSurface) {
    out.kind = Fiber3DKind::One;
    out.points.push_back(f.global(l0, 0.0));
    return out;
  }
  // |D + z e3|^2 = 0 gives the mirrored heights.
  const double z = std::sqrt(std::max(0.0, -minkowski_norm2(D)));
  out.kind = Fiber3DKind::Pair;
  out.points.push_back(f.global(l0, z));
  out.points.push_back(f.global(l0, -z));
  return out;
}

SolutionSet3D invert3d_r3_collinear(const SensorConfig& config, RangeTriple T)
{
  config.require_spatial(3);
  if (!config.collinear()) throw Error(ErrorCode::NotCollinear, "receivers are not collinear");
  const RangeTriple Tc = to_canonical(config, T);
  const double scale = tol::scale_of(config.d_max(), {T.T1, T.T2, T.T3});
  if (!in_octant(Tc, tol::kLinear * scale)) return {};
  if (std::abs(compatibility_residual(config, Tc)) > tol::kSurface * scale * scale) return {};
  const auto& c = config.canonical();
  return revolve(config.position(c[0]), config.position(c[1]), {Tc.T1, Tc.T2});
}

} // namespace rangeloc
