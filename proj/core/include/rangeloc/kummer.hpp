#pragma once

#include "config.hpp"
#include "toa_three.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace rangeloc {

using Homog = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;
using Mat3 = std::array<std::array<double, 3>, 3>;

// Plane n.T + offset = 0 in T-space. When used as a facet of Q3 the
// sign convention is n.T + offset >= 0 inside.
struct Plane {
  std::array<double, 3> n{};
  double offset = 0.0;

  double eval(RangeTriple T) const { return n[0] * T.T1 + n[1] * T.T2 + n[2] * T.T3 + offset; }
};

// T^t A T + g.T + c.
struct Quadric {
  Mat3 A{};
  std::array<double, 3> g{};
  double c = 0.0;

  double eval(RangeTriple T) const;
};

// Receiver pairwise data in the fixed labelling used by the quartic.
struct KummerCoeffs {
  double a = 0.0; // unit d32 . unit d31
  double b = 0.0; // unit d32 . unit d21
  double c = 0.0; // unit d31 . unit d21
  double d21 = 0.0;
  double d31 = 0.0;
  double d32 = 0.0;

  // Rescaled homogeneous coordinates (1 : t1 : t2 : t3) of a range triple.
  Homog rescale(RangeTriple T) const;
  // Inverse of rescale; requires t0 != 0.
  RangeTriple unscale(const Homog& t) const;

  double F(const Homog& t) const;
  Homog gradient(const Homog& t) const;
  Mat4 hessian(const Homog& t) const;
};

// Monomial coefficients of the quartic in the order
// T1^4, T2^4, T3^4, T1^2T2^2, T1^2T3^2, T2^2T3^2, T1^2, T2^2, T3^2, 1.
using QuarticCoefficients = std::array<double, 10>;

// Works for any three planar points, collinear or not.
double kummer_quartic(const std::array<Vec2, 3>& m, RangeTriple T);
// Same quartic written as a squared norm plus corrections.
double kummer_quartic_norm_form(const std::array<Vec2, 3>& m, RangeTriple T);
QuarticCoefficients quartic_coefficients(const std::array<Vec2, 3>& m);

double quartic_residual(const SensorConfig& config, RangeTriple T);
// Divided by d_max^6.
double quartic_residual_normalized(const SensorConfig& config, RangeTriple T);
// Divided by d_max^2 * max(d_max, |T|)^4; used for membership verdicts.
double quartic_residual_scaled(const SensorConfig& config, RangeTriple T);

KummerCoeffs homogeneous_form(const SensorConfig& config);

// Loci of the receiver plane whose images are the 12 conic arcs.
// r_i is the receiver line missing m_i; r_i^+ and r_i^- are the outer
// half-lines starting at the lower / higher indexed receiver on it,
// r_i^0 the segment, Gamma_i the circumcircle arc missing m_i.
enum class LocusKind { HalfLinePlus, HalfLineMinus, Segment, Arc };

struct Locus {
  LocusKind kind = LocusKind::Segment;
  int index = 1; // 1..3

  bool operator==(const Locus&) const = default;
};

std::string to_string(Locus l);
// Accepts "r1+", "r1-", "r1^0" (or "r10"), "Gamma1" (or "G1").
Locus parse_locus(const std::string& label);
std::vector<Locus> all_loci();

struct ConicArc {
  Locus locus;
  Plane plane;   // trope, oriented as a Q3 facet
  Quadric conic; // any quadric cutting the trope in the tangency conic
  std::vector<Plane> bounds; // each >= 0 on the arc

  bool contains(RangeTriple T, double tol) const;
};

ConicArc conic_arc(const SensorConfig& config, Locus locus);
ConicArc conic_arc(const SensorConfig& config, const std::string& label);

// Point of the receiver-plane locus. s in [0, 1): distance s/(1-s)*d along
// a half-line, fraction s of a segment, fraction s of an arc's angle.
Vec2 locus_point(const SensorConfig& config, Locus locus, double s);

enum class NodeKind { ReceiverImage, IdealImage, Other };

struct Node {
  Homog coords{}; // first nonzero coordinate is +1
  NodeKind kind = NodeKind::Other;
  int receiver = -1; // 0-based, for ReceiverImage
};

struct Trope {
  Homog coords{};               // dual coordinates, first nonzero is +1
  Plane plane;                  // the same plane in T coordinates
  std::optional<Locus> preimage;
  bool meets_image = false;
};

struct SurfaceFeatures {
  std::vector<Node> nodes;   // 16
  std::vector<Trope> tropes; // 16
};

SurfaceFeatures nodes_and_tropes(const SensorConfig& config);

struct TangentCone {
  Mat4 homogeneous{}; // Hessian of F at the node
  Quadric affine;     // same cone in T coordinates
  bool ideal = false;
};

// The ideal node yields the elliptic cylinder with axis (1,1,1).
TangentCone tangent_cone(const SensorConfig& config, const Homog& node);
Quadric ideal_cylinder(const SensorConfig& config);

double gaussian_curvature(const SensorConfig& config, Vec2 x);
// Raw formula, no configuration checks.
double curvature_formula(const std::array<Vec2, 3>& m, Vec2 x);

enum class Q3Verdict { Interior, OnFacet, Outside };

const char* to_string(Q3Verdict v);

struct Q3Report {
  std::vector<double> residuals; // 12 (general) or 4 (collinear, canonical)
  std::vector<int> facets;       // facets met with equality
  Q3Verdict verdict = Q3Verdict::Outside;
};

// Facet order for 12: pair (1,2): T1-T2<=d21, T2-T1<=d21, T1+T2>=d21;
// same for (1,3) and (2,3); then Gamma3, Gamma2, Gamma1 tropes.
std::array<double, 12> q3_residuals(double d21, double d31, double d32, RangeTriple T);
// Canonical collinear order: T1-T3<=d31, T2-T3<=d32, T1+T2>=d21,
// d32 T1 + d31 T2 - d21 T3 >= 0.
std::array<double, 4> q3_residuals_collinear(double d21, double d31, double d32, RangeTriple T);
Locus facet_locus(int facet);
Q3Report q3_membership(const SensorConfig& config, RangeTriple T);

enum class HullLabel {
  V0, V1, V2, V3,
  F123, F213, F312,
  G123, G213, G312,
  L1Plus, L1Minus, L2Plus, L2Minus, L3Plus, L3Minus,
  UnboundedEdge,
  NotOnBoundary,
};

const char* to_string(HullLabel l);

struct HullComponent {
  HullLabel label = HullLabel::NotOnBoundary;
  bool in_hull = false;
  int index = -1; // facet index or edge receiver (0-based) when relevant
};

HullComponent hull_boundary_classify(const SensorConfig& config, RangeTriple T);

// Inner description of the hull: T in Q3 and quartic <= 0.
bool in_hull_inner(const SensorConfig& config, RangeTriple T);

// Coefficients of d21^2 * sigma(T)^2 where sigma is the hyperboloid
// attached to the projection of m3 on the line m1 m2.
QuarticCoefficients sigma_square_coefficients(const std::array<Vec2, 3>& m);
// Max over a fixed T grid of |quartic - d21^2 sigma^2| / d_max^6.
double collinear_degeneration_check(const std::array<Vec2, 3>& m);

} // namespace rangeloc
