#include "rangeloc/param_space.hpp"

#include "rangeloc/errors.hpp"

#include <cmath>

namespace rangeloc {

AngleCosines abc_from_config(const SensorConfig& config)
{
  if (config.size() != 3) throw Error(ErrorCode::InvalidArgument, "operation needs 3 receivers");
  if (config.collinear()) throw Error(ErrorCode::DegenerateConfig, "receivers are collinear");
  const Vec3 m1 = config.position(0);
  const Vec3 m2 = config.position(1);
  const Vec3 m3 = config.position(2);
  const Vec3 d21 = normalized(m2 - m1);
  const Vec3 d31 = normalized(m3 - m1);
  const Vec3 d32 = normalized(m3 - m2);
  return {dot(d32, d31), dot(d32, d21), dot(d31, d21)};
}

double cayley_residual(double a, double b, double c)
{
  return 2.0 * a * b * c - a * a - b * b - c * c + 1.0;
}

double b_from_ac(double a, double c)
{
  return a * c - std::sqrt((1.0 - a * a) * (1.0 - c * c));
}

bool param_valid(const ParamPoint& p)
{
  return std::isfinite(p.a) && std::isfinite(p.c) && std::isfinite(p.scale)
      && p.a > -1.0 && p.a < 1.0 && p.c > -1.0 && p.c < 1.0 && p.a + p.c > 0.0 && p.scale > 0.0;
}

SensorConfig config_from_param(const ParamPoint& p)
{
  if (!param_valid(p)) throw Error(ErrorCode::InvalidParam, "parameters outside the valid region");
  const double alpha = std::acos(p.a);
  const double gamma = std::acos(p.c);
  // Law of sines; the angle at m2 is pi - alpha - gamma.
  const double d31 = p.scale * std::sin(alpha + gamma) / std::sin(alpha);
  return validate_config(std::vector<Vec2>{{0.0, 0.0}, {p.scale, 0.0}, {d31 * std::cos(gamma), d31 * std::sin(gamma)}});
}

} // namespace rangeloc
