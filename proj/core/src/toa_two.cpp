#include "rangeloc/toa_two.hpp"

#include "rangeloc/errors.hpp"
#include "rangeloc/tolerance.hpp"

#include <algorithm>
#include <cmath>

namespace rangeloc {

const char* to_string(Q2Verdict v)
{
  switch (v) {
  case Q2Verdict::Interior: return "InteriorQ2";
  case Q2Verdict::Boundary: return "BoundaryQ2";
  case Q2Verdict::Outside: return "OutsideQ2";
  }
  return "Unknown";
}

int Q2Class::fiber() const
{
  switch (verdict) {
  case Q2Verdict::Interior: return 2;
  case Q2Verdict::Boundary: return 1;
  case Q2Verdict::Outside: return 0;
  }
  return 0;
}

RangePair forward2(const SensorConfig& config, Vec2 x)
{
  config.require_planar(2);
  return {distance(x, config.planar(0)), distance(x, config.planar(1))};
}

Q2Class classify2(double d21, RangePair T)
{
  Q2Class out;
  out.residuals = {d21 - (T.T1 - T.T2), d21 - (T.T2 - T.T1), T.T1 + T.T2 - d21};
  const double tol = tol::kLinear * d21;
  bool violated = false;
  for (int k = 0; k < 3; ++k) {
    if (out.residuals[k] < -tol) violated = true;
    else if (out.residuals[k] <= tol) out.facets.push_back(k);
  }
  if (violated) {
    out.verdict = Q2Verdict::Outside;
    out.facets.clear();
  } else {
    out.verdict = out.facets.empty() ? Q2Verdict::Interior : Q2Verdict::Boundary;
  }
  return out;
}

Q2Class classify2(const SensorConfig& config, RangePair T)
{
  if (config.size() != 2) throw Error(ErrorCode::InvalidArgument, "classify2 needs 2 receivers");
  return classify2(config.distance(0, 1), T);
}

TwoRangeSplit split_two_ranges(double d21, RangePair T)
{
  TwoRangeSplit s;
  s.cls = classify2(d21, T);
  s.a = (d21 * d21 + T.T1 * T.T1 - T.T2 * T.T2) / (2.0 * d21);
  if (s.cls.verdict == Q2Verdict::Interior) {
    // Factored b^2 keeps full relative accuracy near the boundary.
    const double p = (T.T1 + T.T2 - d21) * (T.T1 + T.T2 + d21) * (d21 - T.T1 + T.T2) * (d21 + T.T1 - T.T2);
    s.b = std::sqrt(std::max(0.0, p)) / (2.0 * d21);
  }
  return s;
}

SolutionSet invert2(const SensorConfig& config, RangePair T)
{
  config.require_planar(2);
  const Vec2 m1 = config.planar(0);
  const Vec2 m2 = config.planar(1);
  const double d21 = distance(m1, m2);
  const TwoRangeSplit s = split_two_ranges(d21, T);
  if (s.cls.verdict == Q2Verdict::Outside)
    throw Error(ErrorCode::Infeasible, "ranges violate the triangular inequalities");

  const Vec2 u = (m2 - m1) / d21;
  const Vec2 foot = m1 + s.a * u;
  SolutionSet out;
  if (s.cls.verdict == Q2Verdict::Boundary) {
    out.points.push_back(foot);
  } else {
    out.points.push_back(foot + s.b * rot90(u));
    out.points.push_back(foot - s.b * rot90(u));
  }
  return out;
}

} // namespace rangeloc
