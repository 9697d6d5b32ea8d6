#pragma once

#include "config.hpp"
#include "solution.hpp"

#include <array>
#include <vector>

namespace rangeloc {

struct RangePair {
  double T1 = 0.0;
  double T2 = 0.0;
};

enum class Q2Verdict { Interior, Boundary, Outside };

const char* to_string(Q2Verdict v);

// Facets: 0 is T1 - T2 <= d21, 1 is T2 - T1 <= d21, 2 is T1 + T2 >= d21.
// A residual is >= 0 when its inequality holds.
struct Q2Class {
  Q2Verdict verdict = Q2Verdict::Outside;
  std::array<double, 3> residuals{};
  std::vector<int> facets; // facets met with equality (Boundary only)

  int fiber() const;
};

RangePair forward2(const SensorConfig& config, Vec2 x);
Q2Class classify2(const SensorConfig& config, RangePair T);
Q2Class classify2(double d21, RangePair T);

// Mirror pair across the receiver line; first point on the left of m1->m2.
SolutionSet invert2(const SensorConfig& config, RangePair T);

// Circle-of-intersection data shared with the 3D solver: foot point
// offset `a` along m1->m2 and half-chord `b` (0 on the boundary).
struct TwoRangeSplit {
  double a = 0.0;
  double b = 0.0;
  Q2Class cls;
};
TwoRangeSplit split_two_ranges(double d21, RangePair T);

} // namespace rangeloc
