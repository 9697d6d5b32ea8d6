#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>

// Relative tolerances. Every threshold is multiplied by a length scale
// (normally d_max, or max(d_max, |T|) for measurement-space residuals).
namespace rangeloc::tol {

inline constexpr double kDuplicate = 1e-9;
inline constexpr double kCollinear = 1e-9;
// Polyhedral facets (Q2, Q3, P2) and arc bounds.
inline constexpr double kLinear = 1e-9;
// Surface membership of a measured vector: quartic, hyperboloid and
// forward-substitution residuals. Loose enough to accept values printed
// with seven significant digits.
inline constexpr double kSurface = 1e-6;
inline constexpr double kDiscriminant = 1e-10;
inline constexpr double kRoot = 1e-12;

inline double scale_of(double d_max, std::initializer_list<double> values)
{
  double s = d_max;
  for (double v : values) s = std::max(s, std::abs(v));
  return s;
}

} // namespace rangeloc::tol
