#pragma once

#include "config.hpp"

namespace rangeloc {

struct AngleCosines {
  double a = 0.0; // cosine of the angle at m3
  double b = 0.0; // cosine of the exterior angle at m2
  double c = 0.0; // cosine of the angle at m1
};

struct ParamPoint {
  double a = 0.0;
  double c = 0.0;
  double scale = 1.0; // d21
};

AngleCosines abc_from_config(const SensorConfig& config);
double cayley_residual(double a, double b, double c);
// b on the Cayley surface for a triangle with angle cosines a and c.
double b_from_ac(double a, double c);
bool param_valid(const ParamPoint& p);
// m1 = (0,0), m2 = (scale,0), m3 in the upper half-plane.
SensorConfig config_from_param(const ParamPoint& p);

} // namespace rangeloc
