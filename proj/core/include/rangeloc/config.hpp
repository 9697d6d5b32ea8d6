#pragma once

#include "geometry.hpp"

#include <array>
#include <string>
#include <vector>

namespace rangeloc {

enum class ConfigClass { TwoReceivers, GeneralTriangle, CollinearTriple };

const char* to_string(ConfigClass c);

// Validated receiver layout. Positions are kept in input order; for a
// collinear triple `canonical` maps canonical labels (m1, m2 the outer
// receivers, m3 between them) to input indices.
class SensorConfig {
public:
  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(receivers_.size()); }
  ConfigClass kind() const { return kind_; }
  bool collinear() const { return kind_ == ConfigClass::CollinearTriple; }

  // Distance ratio d31 / d21 in canonical labels, 0 < rho < 1.
  double rho() const { return rho_; }
  const std::array<int, 3>& canonical() const { return canonical_; }

  Vec3 position(int i) const { return receivers_.at(i); }
  Vec2 planar(int i) const;
  double distance(int i, int j) const;
  double d_max() const { return d_max_; }

  void require_planar(int n) const;
  void require_spatial(int n) const;

  friend SensorConfig validate_config(const std::vector<std::vector<double>>& raw);

private:
  int dimension_ = 2;
  std::vector<Vec3> receivers_;
  ConfigClass kind_ = ConfigClass::TwoReceivers;
  double rho_ = 0.0;
  std::array<int, 3> canonical_ = {0, 1, 2};
  double d_max_ = 0.0;
};

// Each inner vector is one receiver with 2 or 3 coordinates.
SensorConfig validate_config(const std::vector<std::vector<double>>& raw);
SensorConfig validate_config(const std::vector<Vec2>& receivers);
SensorConfig validate_config(const std::vector<Vec3>& receivers);

} // namespace rangeloc
