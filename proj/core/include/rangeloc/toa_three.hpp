#pragma once

#include "config.hpp"
#include "solution.hpp"

#include <array>
#include <string>
#include <vector>

namespace rangeloc {

struct RangeTriple {
  double T1 = 0.0;
  double T2 = 0.0;
  double T3 = 0.0;

  double operator[](int i) const { return i == 0 ? T1 : (i == 1 ? T2 : T3); }
  double& operator[](int i) { return i == 0 ? T1 : (i == 1 ? T2 : T3); }
};

struct JacobianReport {
  std::array<Vec2, 3> rows{};
  int rank = 0;
  bool degenerate = false;
};

struct ExteriorPoint {
  SpacetimeVec3 displacement; // D_i(L(T)); time component is -T_i
  Vec2 position;              // spatial point of L(T)
};

enum class InfeasibleReason { None, NotInOctant, OffSurface, OutsideQ3 };

const char* to_string(InfeasibleReason r);

struct FeasibilityReport {
  ConfigClass kind = ConfigClass::GeneralTriangle;
  bool in_octant = false;
  double surface_residual = 0.0; // quartic / d_max^6 or hyperboloid / d_max^2
  double raw_residual = 0.0;
  std::vector<double> q3;
  bool feasible = false;
  int fiber = 0;
  InfeasibleReason reason = InfeasibleReason::None;
};

RangeTriple forward3(const SensorConfig& config, Vec2 x);
JacobianReport jacobian3(const SensorConfig& config, Vec2 x);

// Reference index is 0-based.
ExteriorPoint exterior_point(const SensorConfig& config, RangeTriple T, int ref);

// Index chosen by the minimum condition number of the displacement matrix.
int reference_sensor(const SensorConfig& config);
// Linear solve for a fixed reference, no feasibility check.
Vec2 linear_solve(const SensorConfig& config, RangeTriple T, int ref);

SolutionSet invert3(const SensorConfig& config, RangeTriple T);
SolutionSet invert3_collinear(const SensorConfig& config, RangeTriple T);
FeasibilityReport classify3(const SensorConfig& config, RangeTriple T);

// Canonical-label helpers for collinear triples.
RangeTriple to_canonical(const SensorConfig& config, RangeTriple T);
// (1 - rho) T1^2 + rho T2^2 - rho (1 - rho) d21^2 - T3^2, canonical labels.
double compatibility_residual(const SensorConfig& config, RangeTriple canonical_T);

} // namespace rangeloc
