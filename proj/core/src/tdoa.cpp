#include "rangeloc/tdoa.hpp"

#include "rangeloc/errors.hpp"
#include "rangeloc/tolerance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace rangeloc {

namespace {

void require_general(const SensorConfig& config)
{
  config.require_planar(3);
  if (config.collinear()) throw Error(ErrorCode::DegenerateConfig, "receivers are collinear");
}

double tau_scale(const SensorConfig& config, PseudorangePair tau)
{
  return tol::scale_of(config.d_max(), {tau.tau1, tau.tau2});
}

// Pseudoranges relative to the canonical middle receiver.
PseudorangePair canonical_tau(const SensorConfig& config, PseudorangePair tau)
{
  const double delta[3] = {tau.tau1, tau.tau2, 0.0};
  const auto& c = config.canonical();
  return {delta[c[0]] - delta[c[2]], delta[c[1]] - delta[c[2]]};
}

// Real roots of A x^2 + B x + C. A slightly negative discriminant, relative
// to the size of its terms, is read as a double root.
std::vector<double> quadratic_roots(double A, double B, double C)
{
  std::vector<double> roots;
  if (A == 0.0) {
    if (B != 0.0) roots.push_back(-C / B);
    return roots;
  }
  const double disc = B * B - 4.0 * A * C;
  const double size = B * B + 4.0 * std::abs(A * C);
  if (disc < 0.0) {
    if (-disc <= tol::kDiscriminant * size) roots.push_back(-B / (2.0 * A));
    return roots;
  }
  // positive rounding noise on a true double root
  if (disc <= 64.0 * std::numeric_limits<double>::epsilon() * size) {
    roots.push_back(-B / (2.0 * A));
    return roots;
  }
  const double q = -0.5 * (B + std::copysign(std::sqrt(disc), B));
  if (q == 0.0) {
    roots.push_back(0.0);
    return roots;
  }
  roots.push_back(q / A);
  roots.push_back(C / q);
  std::sort(roots.begin(), roots.end());
  return roots;
}

struct Lift {
  TdoaCoeffs k;
  double det = 0.0;
  std::vector<double> lambdas; // admissible roots, distinct
};

Lift lift_roots(const SensorConfig& config, PseudorangePair tau)
{
  Lift L;
  L.k = tdoa_coeffs(config, tau);
  const Vec2 d31 = config.planar(2) - config.planar(0);
  const Vec2 d32 = config.planar(2) - config.planar(1);
  L.det = cross(d31, d32);
  const double a = L.k.a;
  const double b = L.k.b;
  const double c = L.k.c;

  const std::vector<double> roots = quadratic_roots(a, 2.0 * b, c);
  const double lin = tol::kLinear * tau_scale(config, tau);
  const double ad = std::abs(L.det);
  const double vn = std::hypot(L.k.v.x, L.k.v.y, L.k.v.t);
  for (double lam : roots) {
    const double t = -lam * ad;
    if (t < -lin || tau.tau1 + t < -lin || tau.tau2 + t < -lin) continue;
    bool dup = false;
    for (double o : L.lambdas)
      if (std::abs(o - lam) * vn <= lin) dup = true;
    if (!dup) L.lambdas.push_back(lam);
  }
  std::sort(L.lambdas.begin(), L.lambdas.end());
  return L;
}

double polar(PseudorangePair p) { return std::atan2(p.tau2, p.tau1); }

// Index of the sector (between consecutive tangency directions) holding angle th.
int sector_of(const std::vector<double>& bounds, double th)
{
  const int n = static_cast<int>(bounds.size());
  for (int i = 0; i < n; ++i) {
    const double lo = bounds[i];
    const double hi = (i + 1 < n) ? bounds[i + 1] : bounds[0] + 2.0 * std::numbers::pi;
    double t = th;
    while (t < lo) t += 2.0 * std::numbers::pi;
    if (t < hi) return i;
  }
  return 0;
}

} // namespace

PseudorangePair tau_map(const SensorConfig& config, Vec2 x)
{
  config.require_planar(3);
  const double d3 = distance(x, config.planar(2));
  return {distance(x, config.planar(0)) - d3, distance(x, config.planar(1)) - d3};
}

P2Report p2_membership(const SensorConfig& config, PseudorangePair tau)
{
  config.require_planar(3);
  P2Report rep;
  if (config.collinear()) {
    const auto& c = config.canonical();
    const double d31 = config.distance(c[0], c[2]);
    const double d32 = config.distance(c[1], c[2]);
    const PseudorangePair t = canonical_tau(config, tau);
    rep.residuals = {d31 - t.tau1, d31 + t.tau1, d32 - t.tau2, d32 + t.tau2};
  } else {
    const double d21 = config.distance(0, 1);
    const double d31 = config.distance(0, 2);
    const double d32 = config.distance(1, 2);
    const double diff = tau.tau2 - tau.tau1;
    rep.residuals = {d31 - tau.tau1, d31 + tau.tau1, d32 - tau.tau2, d32 + tau.tau2, d21 - diff, d21 + diff};
  }
  const double lin = tol::kLinear * tau_scale(config, tau);
  bool outside = false;
  for (std::size_t f = 0; f < rep.residuals.size(); ++f) {
    if (rep.residuals[f] < -lin) outside = true;
    else if (rep.residuals[f] <= lin) rep.facets.push_back(static_cast<int>(f));
  }
  rep.inside = !outside;
  rep.boundary = !outside && !rep.facets.empty();
  if (outside) rep.facets.clear();
  return rep;
}

TdoaCoeffs tdoa_coeffs(const SensorConfig& config, PseudorangePair tau)
{
  require_general(config);
  const Vec2 d31 = config.planar(2) - config.planar(0);
  const Vec2 d32 = config.planar(2) - config.planar(1);
  const SpacetimeVec3 D31 = lift(d31, -tau.tau1);
  const SpacetimeVec3 D32 = lift(d32, -tau.tau2);
  const SpacetimeVec3 e3 = SpacetimeVec3::e3();

  TdoaCoeffs k;
  const SpacetimeVec3 up = minkowski_norm2(D32) * lift(d31, 0.0) - minkowski_norm2(D31) * lift(d32, 0.0);
  k.D3L0 = hodge_cross(up, e3) / (2.0 * triple_form(lift(d31, 0.0), lift(d32, 0.0), e3));
  k.v = hodge_cross(D31, D32);
  if (k.v.t < 0.0) k.v = -1.0 * k.v;
  k.a = minkowski_norm2(k.v);
  k.b = minkowski_inner(k.D3L0, k.v);
  k.c = minkowski_norm2(k.D3L0);
  return k;
}

double ellipse_value(const SensorConfig& config, PseudorangePair tau)
{
  require_general(config);
  const Vec2 d31 = config.planar(2) - config.planar(0);
  const Vec2 d32 = config.planar(2) - config.planar(1);
  const double det = cross(d31, d32);
  const Vec2 w = tau.tau1 * d32 - tau.tau2 * d31;
  return dot(w, w) - det * det;
}

const char* to_string(TauLabel l)
{
  switch (l) {
  case TauLabel::EMinus: return "EMinus";
  case TauLabel::U1: return "U1";
  case TauLabel::U2: return "U2";
  case TauLabel::U3: return "U3";
  case TauLabel::BoundaryArc: return "BoundaryArc";
  case TauLabel::TangencyPoint: return "TangencyPoint";
  case TauLabel::OutsideIm: return "OutsideIm";
  case TauLabel::CollinearInterior: return "CollinearInterior";
  case TauLabel::CollinearEdge: return "CollinearEdge";
  case TauLabel::InfiniteFiber: return "InfiniteFiber";
  }
  return "Unknown";
}

std::vector<PseudorangePair> tangency_points(const SensorConfig& config)
{
  require_general(config);
  const Vec2 m[3] = {config.planar(0), config.planar(1), config.planar(2)};
  const Vec2 d31 = m[2] - m[0];
  const Vec2 d32 = m[2] - m[1];
  const Vec2 dirs[3] = {normalized(m[2] - m[1]), normalized(m[2] - m[0]), normalized(m[1] - m[0])};
  std::vector<PseudorangePair> out;
  for (const Vec2& u : dirs) {
    const PseudorangePair p{dot(d31, u), dot(d32, u)};
    out.push_back(p);
    out.push_back({-p.tau1, -p.tau2});
  }
  return out;
}

std::vector<PseudorangePair> receiver_images(const SensorConfig& config)
{
  config.require_planar(3);
  return {tau_map(config, config.planar(0)), tau_map(config, config.planar(1)), tau_map(config, config.planar(2))};
}

TauRegion classify_tau(const SensorConfig& config, PseudorangePair tau)
{
  config.require_planar(3);
  TauRegion reg;
  const P2Report p2 = p2_membership(config, tau);
  reg.p2_residuals = p2.residuals;
  const double lin = tol::kLinear * tau_scale(config, tau);

  if (config.collinear()) {
    const auto& c = config.canonical();
    const double d31 = config.distance(c[0], c[2]);
    const double d32 = config.distance(c[1], c[2]);
    const PseudorangePair t = canonical_tau(config, tau);
    const PseudorangePair R1{-d31, d32};
    const PseudorangePair R2{d31, -d32};
    auto near = [&](PseudorangePair r) { return std::hypot(t.tau1 - r.tau1, t.tau2 - r.tau2) <= lin; };
    if (near(R1) || near(R2)) {
      reg.label = TauLabel::InfiniteFiber;
      reg.fiber = kInfiniteFiber;
      reg.id = near(R1) ? 0 : 1;
      return reg;
    }
    const double top = d32 - t.tau2;
    const double right = d31 - t.tau1;
    const double base = (d32 * t.tau1 + d31 * t.tau2) / std::hypot(d31, d32);
    if (top < -lin || right < -lin || base <= lin) {
      reg.label = TauLabel::OutsideIm;
      return reg;
    }
    if (top <= lin || right <= lin) {
      reg.label = TauLabel::CollinearEdge;
      reg.fiber = 1;
      reg.id = top <= lin ? 0 : 1;
      return reg;
    }
    reg.label = TauLabel::CollinearInterior;
    reg.fiber = 2;
    return reg;
  }

  if (!p2.inside) return reg;
  const auto tangency = tangency_points(config);
  for (std::size_t i = 0; i < tangency.size(); ++i) {
    if (std::hypot(tau.tau1 - tangency[i].tau1, tau.tau2 - tangency[i].tau2) <= lin) {
      reg.label = TauLabel::TangencyPoint;
      reg.id = static_cast<int>(i);
      return reg;
    }
  }

  const Lift L = lift_roots(config, tau);
  reg.a = L.k.a;
  reg.b = L.k.b;
  reg.c = L.k.c;
  reg.fiber = static_cast<int>(L.lambdas.size());
  const double an = L.k.a / std::pow(config.d_max(), 4);
  if (reg.fiber == 0) return reg;
  if (an < -tol::kDiscriminant && reg.fiber == 1) {
    reg.label = TauLabel::EMinus;
    return reg;
  }
  if (reg.fiber == 2) {
    std::vector<double> bounds;
    for (const auto& p : tangency) bounds.push_back(polar(p));
    std::sort(bounds.begin(), bounds.end());
    const int s = sector_of(bounds, polar(tau));
    const auto R = receiver_images(config);
    for (int i = 0; i < 3; ++i) {
      if (sector_of(bounds, polar(R[i])) == s) {
        reg.label = static_cast<TauLabel>(static_cast<int>(TauLabel::U1) + i);
        reg.id = i;
        return reg;
      }
    }
  }
  reg.label = TauLabel::BoundaryArc;
  reg.id = p2.facets.empty() ? -1 : p2.facets.front();
  return reg;
}

SolutionSet invert_tdoa(const SensorConfig& config, PseudorangePair tau)
{
  require_general(config);
  SolutionSet out;
  const TauRegion reg = classify_tau(config, tau);
  if (reg.fiber <= 0) return out;
  const Lift L = lift_roots(config, tau);
  const Vec2 m3 = config.planar(2);
  for (double lam : L.lambdas) out.points.push_back(m3 + spatial(L.k.D3L0 + lam * L.k.v));
  return out;
}

std::optional<SolutionSet> invert_tdoa_collinear(const SensorConfig& config, PseudorangePair tau)
{
  config.require_planar(3);
  if (!config.collinear()) throw Error(ErrorCode::NotCollinear, "receivers are not collinear");
  const TauRegion reg = classify_tau(config, tau);
  if (reg.label == TauLabel::InfiniteFiber) return std::nullopt;
  SolutionSet out;
  if (reg.fiber <= 0) return out;

  const auto& c = config.canonical();
  const double d21 = config.distance(c[0], c[1]);
  const double rho = config.rho();
  const PseudorangePair t = canonical_tau(config, tau);
  // The lift (tau1 + s, tau2 + s, s) meets the hyperboloid linearly in s.
  const double den = 2.0 * ((1.0 - rho) * t.tau1 + rho * t.tau2);
  const double s = -((1.0 - rho) * t.tau1 * t.tau1 + rho * t.tau2 * t.tau2 - rho * (1.0 - rho) * d21 * d21) / den;
  const double Tc[3] = {t.tau1 + s, t.tau2 + s, s};
  double T[3] = {0.0, 0.0, 0.0};
  for (int i = 0; i < 3; ++i) T[c[i]] = std::max(0.0, Tc[i]);
  return invert3_collinear(config, {T[0], T[1], T[2]});
}

PseudorangePair project_pi(RangeTriple T)
{
  return {T.T1 - T.T3, T.T2 - T.T3};
}

FiberLine fiber_line(PseudorangePair tau)
{
  return {tau};
}

TQuadratic t_quadratic(const SensorConfig& config, PseudorangePair tau)
{
  require_general(config);
  const Vec2 d31 = config.planar(2) - config.planar(0);
  const Vec2 d32 = config.planar(2) - config.planar(1);
  const double det = cross(d31, d32);
  const Vec2 w = tau.tau1 * d32 - tau.tau2 * d31;
  const double n31 = dot(d31, d31) - tau.tau1 * tau.tau1;
  const double n32 = dot(d32, d32) - tau.tau2 * tau.tau2;
  const Vec2 u = n31 * d32 - n32 * d31;

  TQuadratic q;
  q.A = 4.0 * (dot(w, w) - det * det);
  q.B = -4.0 * dot(w, u);
  q.C = dot(u, u);
  q.roots = quadratic_roots(q.A, q.B, q.C);
  return q;
}

} // namespace rangeloc
