#pragma once

#include "config.hpp"
#include "solution.hpp"
#include "toa_three.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rangeloc {

// Range differences relative to receiver 3: tau_i = d_i - d_3.
struct PseudorangePair {
  double tau1 = 0.0;
  double tau2 = 0.0;
};

PseudorangePair tau_map(const SensorConfig& config, Vec2 x);

struct P2Report {
  std::vector<double> residuals; // >= 0 inside
  std::vector<int> facets;       // facets met with equality
  bool inside = false;
  bool boundary = false;
};

// Six facets: d31-tau1, d31+tau1, d32-tau2, d32+tau2, d21-(tau2-tau1),
// d21+(tau2-tau1). Collinear configs drop the last two.
P2Report p2_membership(const SensorConfig& config, PseudorangePair tau);

struct TdoaCoeffs {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  SpacetimeVec3 D3L0; // D_3(L0), purely spatial
  SpacetimeVec3 v;    // direction of L21, oriented with positive time component
};

TdoaCoeffs tdoa_coeffs(const SensorConfig& config, PseudorangePair tau);

// Ellipse E: a(tau) written as a quadratic form in tau.
double ellipse_value(const SensorConfig& config, PseudorangePair tau);

enum class TauLabel {
  EMinus,
  U1,
  U2,
  U3,
  BoundaryArc,
  TangencyPoint,
  OutsideIm,
  CollinearInterior,
  CollinearEdge,
  InfiniteFiber,
};

const char* to_string(TauLabel l);

inline constexpr int kInfiniteFiber = -1;

struct TauRegion {
  TauLabel label = TauLabel::OutsideIm;
  int fiber = 0;  // kInfiniteFiber for the collinear vertices
  int id = -1;    // facet index, tangency index or U component (0-based)
  std::vector<double> p2_residuals;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

TauRegion classify_tau(const SensorConfig& config, PseudorangePair tau);

SolutionSet invert_tdoa(const SensorConfig& config, PseudorangePair tau);
// nullopt when the fiber is a half-line.
std::optional<SolutionSet> invert_tdoa_collinear(const SensorConfig& config, PseudorangePair tau);

PseudorangePair project_pi(RangeTriple T);

struct FiberLine {
  PseudorangePair tau;
  RangeTriple at(double t) const { return {tau.tau1 + t, tau.tau2 + t, t}; }
};

FiberLine fiber_line(PseudorangePair tau);

// quartic(tau1 + t, tau2 + t, t) = A t^2 + B t + C.
struct TQuadratic {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  std::vector<double> roots;
};

TQuadratic t_quadratic(const SensorConfig& config, PseudorangePair tau);

// Tangency points of E with the P2 facets, order T1+, T1-, T2+, T2-, T3+, T3-.
std::vector<PseudorangePair> tangency_points(const SensorConfig& config);
// Images of the receivers R^i = tau(m_i).
std::vector<PseudorangePair> receiver_images(const SensorConfig& config);

} // namespace rangeloc
