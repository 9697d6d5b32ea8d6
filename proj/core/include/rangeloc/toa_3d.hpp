#pragma once

#include "config.hpp"
#include "toa_three.hpp"
#include "toa_two.hpp"

#include <optional>
#include <vector>

namespace rangeloc {

struct CircleFiber {
  Vec3 center;
  double radius = 0.0;
  Vec3 axis; // unit vector along the receiver line
  Vec3 u;    // in-plane frame, u x w = axis
  Vec3 w;

  Vec3 at(double angle) const;
};

enum class Fiber3DKind { Empty, One, Pair, Circle };

const char* to_string(Fiber3DKind k);

struct SolutionSet3D {
  Fiber3DKind kind = Fiber3DKind::Empty;
  std::vector<Vec3> points;
  std::optional<CircleFiber> circle;
};

enum class Solid3DVerdict { InteriorSolid, OnSurface, Outside };

const char* to_string(Solid3DVerdict v);

struct Feasibility3DReport {
  double quartic = 0.0;
  double normalized = 0.0; // quartic / d_max^6
  bool in_octant = false;
  Solid3DVerdict verdict = Solid3DVerdict::Outside;
  int fiber = 0;
};

std::vector<double> forward3d(const SensorConfig& config, Vec3 x);
RangePair forward3d_r2(const SensorConfig& config, Vec3 x);
RangeTriple forward3d_r3(const SensorConfig& config, Vec3 x);

// Rank of the matrix of unit gradients of the receiver distances.
int jacobian3d_rank(const SensorConfig& config, Vec3 x);

SolutionSet3D invert3d_r2(const SensorConfig& config, RangePair T);
Feasibility3DReport classify3d_r3(const SensorConfig& config, RangeTriple T);
SolutionSet3D invert3d_r3(const SensorConfig& config, RangeTriple T);
SolutionSet3D invert3d_r3_collinear(const SensorConfig& config, RangeTriple T);

// Orthonormal frame (u, w) orthogonal to a unit axis, built from the
// coordinate axis least aligned with it.
void circle_frame(Vec3 axis, Vec3& u, Vec3& w);

} // namespace rangeloc
