#include "rangeloc/sim.hpp"

#include "rangeloc/errors.hpp"

#include <cmath>
#include <numbers>

namespace rangeloc {

double GaussianStream::uniform()
{
  // 53 random bits mapped to [0, 1).
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double GaussianStream::next()
{
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform(); // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double th = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(th);
  has_spare_ = true;
  return r * std::cos(th);
}

std::vector<std::vector<double>> gen_noisy_toa(const SensorConfig& config, Vec3 x, const NoiseSpec& spec, int n)
{
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "sample count must be at least 1");
  if (!(spec.sigma >= 0.0) || !std::isfinite(spec.sigma) || !std::isfinite(spec.bias))
    throw Error(ErrorCode::InvalidArgument, "sigma must be finite and nonnegative");
  std::vector<double> exact;
  for (int i = 0; i < config.size(); ++i) exact.push_back(distance(x, config.position(i)));

  GaussianStream g(spec.seed);
  std::vector<std::vector<double>> out;
  out.reserve(n);
  for (int s = 0; s < n; ++s) {
    std::vector<double> row(exact.size());
    for (std::size_t i = 0; i < exact.size(); ++i) row[i] = exact[i] + spec.sigma * g.next() + spec.bias;
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<std::vector<double>> gen_noisy_toa(const SensorConfig& config, Vec2 x, const NoiseSpec& spec, int n)
{
  if (config.dimension() != 2) throw Error(ErrorCode::DimensionMismatch, "planar source for a 3D configuration");
  return gen_noisy_toa(config, Vec3{x.x, x.y, 0.0}, spec, n);
}

} // namespace rangeloc
