#include "rangeloc/config.hpp"

#include "rangeloc/errors.hpp"
#include "rangeloc/tolerance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rangeloc {

const char* to_string(ConfigClass c)
{
  switch (c) {
  case ConfigClass::TwoReceivers: return "TwoReceivers";
  case ConfigClass::GeneralTriangle: return "GeneralTriangle";
  case ConfigClass::CollinearTriple: return "CollinearTriple";
  }
  return "Unknown";
}

Vec2 SensorConfig::planar(int i) const
{
  if (dimension_ != 2) throw Error(ErrorCode::DimensionMismatch, "planar receiver requested from a 3D configuration");
  const Vec3 p = receivers_.at(i);
  return {p.x, p.y};
}

double SensorConfig::distance(int i, int j) const
{
  return rangeloc::distance(receivers_.at(i), receivers_.at(j));
}

void SensorConfig::require_planar(int n) const
{
  if (dimension_ != 2)
    throw Error(ErrorCode::DimensionMismatch, "operation needs a planar configuration");
  if (size() != n)
    throw Error(ErrorCode::InvalidArgument, "operation needs " + std::to_string(n) + " receivers");
}

void SensorConfig::require_spatial(int n) const
{
  if (dimension_ != 3)
    throw Error(ErrorCode::DimensionMismatch, "operation needs a 3D configuration");
  if (size() != n)
    throw Error(ErrorCode::InvalidArgument, "operation needs " + std::to_string(n) + " receivers");
}

SensorConfig validate_config(const std::vector<std::vector<double>>& raw)
{
  if (raw.size() != 2 && raw.size() != 3)
    throw Error(ErrorCode::InvalidArgument, "expected 2 or 3 receivers");
  const std::size_t dim = raw.front().size();
  if (dim != 2 && dim != 3)
    throw Error(ErrorCode::DimensionMismatch, "receivers must have 2 or 3 coordinates");

  SensorConfig cfg;
  cfg.dimension_ = static_cast<int>(dim);
  for (const auto& p : raw) {
    if (p.size() != dim)
      throw Error(ErrorCode::DimensionMismatch, "receivers have different dimensions");
    for (double v : p)
      if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite receiver coordinate");
    cfg.receivers_.push_back({p[0], p[1], dim == 3 ? p[2] : 0.0});
  }

  const int n = cfg.size();
  double d_max = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) d_max = std::max(d_max, cfg.distance(i, j));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(cfg.distance(i, j) > tol::kDuplicate * d_max))
        throw Error(ErrorCode::DuplicateReceiver,
                    "receivers " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
  cfg.d_max_ = d_max;

  if (n == 2) {
    cfg.kind_ = ConfigClass::TwoReceivers;
    return cfg;
  }

  const Vec3& m1 = cfg.receivers_[0];
  const Vec3& m2 = cfg.receivers_[1];
  const Vec3& m3 = cfg.receivers_[2];
  const double area2 = norm(cross(m2 - m1, m3 - m1));

  // Sine of the smallest angle, which is symmetric in the labels.
  struct Side { double len; int i; int j; };
  Side sides[3] = {{cfg.distance(0, 1), 0, 1}, {cfg.distance(0, 2), 0, 2}, {cfg.distance(1, 2), 1, 2}};
  std::sort(std::begin(sides), std::end(sides), [](const Side& a, const Side& b) {
    if (a.len != b.len) return a.len > b.len;
    return a.i + a.j < b.i + b.j;
  });
  const double sine = area2 / (sides[0].len * sides[1].len);
  if (sine > tol::kCollinear) {
    cfg.kind_ = ConfigClass::GeneralTriangle;
    return cfg;
  }

  cfg.kind_ = ConfigClass::CollinearTriple;
  const int outer_a = sides[0].i;
  const int outer_b = sides[0].j;
  const int middle = 3 - outer_a - outer_b;
  const double da = cfg.distance(outer_a, middle);
  const double db = cfg.distance(outer_b, middle);
  int first = outer_a;
  int second = outer_b;
  if (db < da || (db == da && outer_b < outer_a)) std::swap(first, second);
  cfg.canonical_ = {first, second, middle};
  cfg.rho_ = cfg.distance(first, middle) / cfg.distance(first, second);
  return cfg;
}

SensorConfig validate_config(const std::vector<Vec2>& receivers)
{
  std::vector<std::vector<double>> raw;
  for (const Vec2& p : receivers) raw.push_back({p.x, p.y});
  if (raw.empty()) throw Error(ErrorCode::InvalidArgument, "expected 2 or 3 receivers");
  return validate_config(raw);
}

SensorConfig validate_config(const std::vector<Vec3>& receivers)
{
  std::vector<std::vector<double>> raw;
  for (const Vec3& p : receivers) raw.push_back({p.x, p.y, p.z});
  if (raw.empty()) throw Error(ErrorCode::InvalidArgument, "expected 2 or 3 receivers");
  return validate_config(raw);
}

} // namespace rangeloc
