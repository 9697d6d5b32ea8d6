#pragma once

#include "geometry.hpp"

#include <cstddef>
#include <vector>

namespace rangeloc {

// Planar fiber of a localization query: zero, one or two points.
struct SolutionSet {
  std::vector<Vec2> points;

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
  const Vec2& operator[](std::size_t i) const { return points[i]; }
};

} // namespace rangeloc
