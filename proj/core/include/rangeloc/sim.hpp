#pragma once

#include "config.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace rangeloc {

struct NoiseSpec {
  double sigma = 0.0;
  double bias = 0.0;
  std::uint64_t seed = 0;
};

// Standard normal deviates from mt19937_64 through Box-Muller. The
// transform is written out here so streams match across standard libraries.
class GaussianStream {
public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next();

private:
  double uniform();

  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Each sample is the range vector plus independent noise plus a shared bias.
std::vector<std::vector<double>> gen_noisy_toa(const SensorConfig& config, Vec3 x,
                                               const NoiseSpec& spec, int n);
std::vector<std::vector<double>> gen_noisy_toa(const SensorConfig& config, Vec2 x,
                                               const NoiseSpec& spec, int n);

} // namespace rangeloc
