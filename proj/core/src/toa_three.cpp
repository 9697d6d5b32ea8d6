#include "rangeloc/toa_three.hpp"

#include "rangeloc/errors.hpp"
#include "rangeloc/kummer.hpp"
#include "rangeloc/toa_two.hpp"
#include "rangeloc/tolerance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rangeloc {

const char* to_string(InfeasibleReason r)
{
  switch (r) {
  case InfeasibleReason::None: return "None";
  case InfeasibleReason::NotInOctant: return "NotInOctant";
  case InfeasibleReason::OffSurface: return "OffSurface";
  case InfeasibleReason::OutsideQ3: return "OutsideQ3";
  }
  return "Unknown";
}

namespace {

void require_general(const SensorConfig& config)
{
  config.require_planar(3);
  if (config.collinear())
    throw Error(ErrorCode::DegenerateConfig, "receivers are collinear");
}

bool in_octant(RangeTriple T, double tol)
{
  return T.T1 >= -tol && T.T2 >= -tol && T.T3 >= -tol;
}

void others(int i, int& j, int& k)
{
  j = (i == 0) ? 1 : 0;
  k = (i == 2) ? 1 : 2;
}

double condition_number(Vec2 r1, Vec2 r2)
{
  // Singular values of the 2x2 matrix with rows r1, r2.
  const double f = dot(r1, r1) + dot(r2, r2);
  const double det = std::abs(cross(r1, r2));
  const double disc = std::sqrt(std::max(0.0, f * f - 4.0 * det * det));
  const double smax2 = 0.5 * (f + disc);
  const double smin2 = 2.0 * det * det / (f + disc);
  if (smin2 <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(smax2 / smin2);
}

} // namespace

RangeTriple forward3(const SensorConfig& config, Vec2 x)
{
  config.require_planar(3);
  return {distance(x, config.planar(0)), distance(x, config.planar(1)), distance(x, config.planar(2))};
}

JacobianReport jacobian3(const SensorConfig& config, Vec2 x)
{
  config.require_planar(3);
  JacobianReport rep;
  for (int i = 0; i < 3; ++i) {
    const Vec2 d = x - config.planar(i);
    const double n = norm(d);
    if (n <= tol::kLinear * config.d_max())
      throw Error(ErrorCode::AtReceiver, "source coincides with receiver " + std::to_string(i + 1));
    rep.rows[i] = d / n;
  }
  // Rows are unit vectors, so the largest 2x2 minor is a sine.
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) s = std::max(s, std::abs(cross(rep.rows[i], rep.rows[j])));
  rep.rank = s > tol::kLinear ? 2 : 1;
  rep.degenerate = rep.rank < 2;
  return rep;
}

ExteriorPoint exterior_point(const SensorConfig& config, RangeTriple T, int ref)
{
  require_general(config);
  if (ref < 0 || ref > 2) throw Error(ErrorCode::InvalidArgument, "reference index out of range");
  int j = 0;
  int k = 0;
  others(ref, j, k);
  const Vec2 mi = config.planar(ref);
  const SpacetimeVec3 dji = lift(config.planar(j) - mi, 0.0);
  const SpacetimeVec3 dki = lift(config.planar(k) - mi, 0.0);
  const double Ti = T[ref];
  const double Tj = T[j];
  const double Tk = T[k];
  const SpacetimeVec3 e3 = SpacetimeVec3::e3();

  const double cj = minkowski_inner(dji, dji) - Tj * Tj + Ti * Ti;
  const double ck = minkowski_inner(dki, dki) - Tk * Tk + Ti * Ti;
  const SpacetimeVec3 w = cj * dki - ck * dji;
  const SpacetimeVec3 num = hodge_cross(w, e3);
  const double den = 2.0 * triple_form(dji, dki, e3);

  ExteriorPoint out;
  out.displacement = num / den - Ti * e3;
  out.position = mi + spatial(out.displacement);
  return out;
}

int reference_sensor(const SensorConfig& config)
{
  require_general(config);
  int best = 0;
  double best_cond = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    int j = 0;
    int k = 0;
    others(i, j, k);
    const Vec2 mi = config.planar(i);
    const double c = condition_number(config.planar(j) - mi, config.planar(k) - mi);
    if (c < best_cond) {
      best_cond = c;
      best = i;
    }
  }
  return best;
}

Vec2 linear_solve(const SensorConfig& config, RangeTriple T, int ref)
{
  require_general(config);
  int j = 0;
  int k = 0;
  others(ref, j, k);
  const Vec2 mi = config.planar(ref);
  const Vec2 rj = config.planar(j) - mi;
  const Vec2 rk = config.planar(k) - mi;
  const double Ti2 = T[ref] * T[ref];
  const double bj = 0.5 * (dot(rj, rj) + Ti2 - T[j] * T[j]);
  const double bk = 0.5 * (dot(rk, rk) + Ti2 - T[k] * T[k]);
  const double det = cross(rj, rk);
  const Vec2 y{(bj * rk.y - bk * rj.y) / det, (rj.x * bk - rk.x * bj) / det};
  return mi + y;
}

SolutionSet invert3(const SensorConfig& config, RangeTriple T)
{
  require_general(config);
  const Vec2 x = linear_solve(config, T, reference_sensor(config));
  const RangeTriple back = forward3(config, x);
  const double scale = tol::scale_of(config.d_max(), {T.T1, T.T2, T.T3});
  double err = 0.0;
  for (int i = 0; i < 3; ++i) err = std::max(err, std::abs(back[i] - T[i]));
  SolutionSet out;
  if (err <= tol::kSurface * scale) out.points.push_back(x);
  return out;
}

RangeTriple to_canonical(const SensorConfig& config, RangeTriple T)
{
  const auto& c = config.canonical();
  return {T[c[0]], T[c[1]], T[c[2]]};
}

double compatibility_residual(const SensorConfig& config, RangeTriple T)
{
  const auto& c = config.canonical();
  const double d21 = config.distance(c[0], c[1]);
  const double rho = config.rho();
  return (1.0 - rho) * T.T1 * T.T1 + rho * T.T2 * T.T2 - rho * (1.0 - rho) * d21 * d21 - T.T3 * T.T3;
}

SolutionSet invert3_collinear(const SensorConfig& config, RangeTriple T)
{
  config.require_planar(3);
  if (!config.collinear()) throw Error(ErrorCode::NotCollinear, "receivers are not collinear");
  const RangeTriple Tc = to_canonical(config, T);
  const double scale = tol::scale_of(config.d_max(), {T.T1, T.T2, T.T3});
  SolutionSet out;
  if (!in_octant(Tc, tol::kLinear * scale)) return out;
  if (std::abs(compatibility_residual(config, Tc)) > tol::kSurface * scale * scale) return out;

  const auto& c = config.canonical();
  const Vec2 m1 = config.planar(c[0]);
  const Vec2 m2 = config.planar(c[1]);
  const SpacetimeVec3 d21 = lift(m2 - m1, 0.0);
  const double n21 = minkowski_norm2(d21);

  // D1(L0) on the line through M1 and M2; lambda solves
  // d21^2 lambda^2 + |D1(L0)|^2 = 0 along v = *(d21 ^ e3).
  const Q2Class cls = classify2(std::sqrt(n21), {Tc.T1, Tc.T2});
  if (cls.verdict == Q2Verdict::Outside) return out;
  const double alpha = (n21 - Tc.T2 * Tc.T2 + Tc.T1 * Tc.T1) / (2.0 * n21);
  const SpacetimeVec3 D1L0 = alpha * d21 - Tc.T1 * SpacetimeVec3::e3();
  const SpacetimeVec3 v = hodge_cross(d21, SpacetimeVec3::e3());
  const Vec2 base = m1 + spatial(D1L0);
  if (cls.verdict == Q2Verdict::Boundary) {
    out.points.push_back(base);
    return out;
  }
  const double p = (Tc.T1 + Tc.T2 - std::sqrt(n21)) * (Tc.T1 + Tc.T2 + std::sqrt(n21))
                 * (std::sqrt(n21) - Tc.T1 + Tc.T2) * (std::sqrt(n21) + Tc.T1 - Tc.T2);
  // -|D1(L0)|^2 = p / (4 d21^2), written in factored form.
  const double lambda = std::sqrt(std::max(0.0, p) / (4.0 * n21)) / std::sqrt(n21);
  const Vec2 step = spatial(lambda * v);
  // v = *(d21 ^ e3) points to the right of m1->m2; list the left point first.
  out.points.push_back(base - step);
  out.points.push_back(base + step);
  return out;
}

FeasibilityReport classify3(const SensorConfig& config, RangeTriple T)
{
  config.require_planar(3);
  FeasibilityReport rep;
  rep.kind = config.kind();
  const double scale = tol::scale_of(config.d_max(), {T.T1, T.T2, T.T3});
  rep.in_octant = in_octant(T, tol::kLinear * scale);
  const Q3Report q3 = q3_membership(config, T);
  rep.q3 = q3.residuals;

  if (!config.collinear()) {
    rep.raw_residual = quartic_residual(config, T);
    rep.surface_residual = quartic_residual_normalized(config, T);
    const bool on_surface = std::abs(quartic_residual_scaled(config, T)) <= tol::kSurface;
    if (!rep.in_octant) rep.reason = InfeasibleReason::NotInOctant;
    else if (!on_surface) rep.reason = InfeasibleReason::OffSurface;
    rep.feasible = rep.reason == InfeasibleReason::None;
    rep.fiber = rep.feasible ? 1 : 0;
    return rep;
  }

  const RangeTriple Tc = to_canonical(config, T);
  rep.raw_residual = compatibility_residual(config, Tc);
  rep.surface_residual = rep.raw_residual / (config.d_max() * config.d_max());
  const bool on_surface = std::abs(rep.raw_residual) <= tol::kSurface * scale * scale;
  if (!rep.in_octant) rep.reason = InfeasibleReason::NotInOctant;
  else if (!on_surface) rep.reason = InfeasibleReason::OffSurface;
  else if (q3.verdict == Q3Verdict::Outside) rep.reason = InfeasibleReason::OutsideQ3;
  rep.feasible = rep.reason == InfeasibleReason::None;
  if (rep.feasible) rep.fiber = q3.verdict == Q3Verdict::Interior ? 2 : 1;
  return rep;
}

} // namespace rangeloc
