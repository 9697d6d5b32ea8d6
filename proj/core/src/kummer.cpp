#include "rangeloc/kummer.hpp"

#include "rangeloc/errors.hpp"
#include "rangeloc/tolerance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rangeloc {

namespace {

std::array<Vec2, 3> planar_receivers(const SensorConfig& config)
{
  return {config.planar(0), config.planar(1), config.planar(2)};
}

void require_general(const SensorConfig& config)
{
  config.require_planar(3);
  if (config.collinear())
    throw Error(ErrorCode::DegenerateConfig, "receivers are collinear");
}

double max_abs(RangeTriple T)
{
  return std::max({std::abs(T.T1), std::abs(T.T2), std::abs(T.T3)});
}

// Pairwise coupling of t_i^2 t_j^2 in F.
std::array<std::array<double, 4>, 4> couplings(const KummerCoeffs& k)
{
  std::array<std::array<double, 4>, 4> kap{};
  auto set = [&](int i, int j, double v) { kap[i][j] = v; kap[j][i] = v; };
  set(1, 2, -2.0 * k.a);
  set(0, 3, -2.0 * k.a);
  set(1, 3, 2.0 * k.b);
  set(0, 2, 2.0 * k.b);
  set(2, 3, -2.0 * k.c);
  set(0, 1, -2.0 * k.c);
  return kap;
}

Homog normalize_first(Homog t)
{
  for (double v : t) {
    if (std::abs(v) > 0.0) {
      const double s = v;
      for (double& w : t) w /= s;
      return t;
    }
  }
  return t;
}

// Receivers (0-based) other than i, increasing.
void others(int i, int& j, int& k)
{
  j = (i == 0) ? 1 : 0;
  k = (i == 2) ? 1 : 2;
}

// Start and far receiver of a half-line, endpoints of a segment or arc.
struct LocusGeometry {
  int p = 0;
  int q = 0;
  int o = 0;
};

LocusGeometry locus_geometry(Locus l)
{
  const int i = l.index - 1;
  int j = 0;
  int k = 0;
  others(i, j, k);
  LocusGeometry g;
  g.o = i;
  if (l.kind == LocusKind::HalfLineMinus) {
    g.p = k;
    g.q = j;
  } else {
    g.p = j;
    g.q = k;
  }
  return g;
}

double norm3(const std::array<double, 3>& v)
{
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

bool same_plane(const Plane& a, const Plane& b, double scale)
{
  const double na = norm3(a.n);
  const double nb = norm3(b.n);
  for (double sign : {1.0, -1.0}) {
    double err = std::abs(a.offset / na - sign * b.offset / nb) / scale;
    for (int i = 0; i < 3; ++i) err += std::abs(a.n[i] / na - sign * b.n[i] / nb);
    if (err <= 1e-9) return true;
  }
  return false;
}

} // namespace

double Quadric::eval(RangeTriple T) const
{
  const double t[3] = {T.T1, T.T2, T.T3};
  double s = c;
  for (int i = 0; i < 3; ++i) {
    s += g[i] * t[i];
    for (int j = 0; j < 3; ++j) s += A[i][j] * t[i] * t[j];
  }
  return s;
}

double kummer_quartic(const std::array<Vec2, 3>& m, RangeTriple T)
{
  const Vec2 d21 = m[1] - m[0];
  const Vec2 d31 = m[2] - m[0];
  const Vec2 d32 = m[2] - m[1];
  const double n21 = dot(d21, d21);
  const double n31 = dot(d31, d31);
  const double n32 = dot(d32, d32);
  const double p3231 = dot(d32, d31);
  const double p3221 = dot(d32, d21);
  const double p3121 = dot(d31, d21);
  const double T1 = T.T1 * T.T1;
  const double T2 = T.T2 * T.T2;
  const double T3 = T.T3 * T.T3;
  return n32 * T1 * T1 + n31 * T2 * T2 + n21 * T3 * T3
       - 2.0 * p3231 * T1 * T2 + 2.0 * p3221 * T1 * T3 - 2.0 * p3121 * T2 * T3
       - 2.0 * p3121 * n32 * T1 + 2.0 * p3221 * n31 * T2 - 2.0 * p3231 * n21 * T3
       + n21 * n31 * n32;
}

double kummer_quartic_norm_form(const std::array<Vec2, 3>& m, RangeTriple T)
{
  const Vec2 d21 = m[1] - m[0];
  const Vec2 d31 = m[2] - m[0];
  const Vec2 d32 = m[2] - m[1];
  const double T1 = T.T1 * T.T1;
  const double T2 = T.T2 * T.T2;
  const double T3 = T.T3 * T.T3;
  const Vec2 w = T1 * d32 - T2 * d31 + T3 * d21;
  return dot(w, w)
       - 2.0 * T1 * dot(d32, d32) * dot(d21, d31)
       + 2.0 * T2 * dot(d31, d31) * dot(d21, d32)
       - 2.0 * T3 * dot(d21, d21) * dot(d31, d32)
       + dot(d21, d21) * dot(d31, d31) * dot(d32, d32);
}

QuarticCoefficients quartic_coefficients(const std::array<Vec2, 3>& m)
{
  const Vec2 d21 = m[1] - m[0];
  const Vec2 d31 = m[2] - m[0];
  const Vec2 d32 = m[2] - m[1];
  const double n21 = dot(d21, d21);
  const double n31 = dot(d31, d31);
  const double n32 = dot(d32, d32);
  return {n32, n31, n21,
          -2.0 * dot(d32, d31), 2.0 * dot(d32, d21), -2.0 * dot(d31, d21),
          -2.0 * dot(d31, d21) * n32, 2.0 * dot(d32, d21) * n31, -2.0 * dot(d32, d31) * n21,
          n21 * n31 * n32};
}

double quartic_residual(const SensorConfig& config, RangeTriple T)
{
  require_general(config);
  return kummer_quartic(planar_receivers(config), T);
}

double quartic_residual_normalized(const SensorConfig& config, RangeTriple T)
{
  const double d = config.d_max();
  return quartic_residual(config, T) / std::pow(d, 6);
}

double quartic_residual_scaled(const SensorConfig& config, RangeTriple T)
{
  const double d = config.d_max();
  const double s = std::max(d, max_abs(T));
  return quartic_residual(config, T) / (d * d * std::pow(s, 4));
}

Homog KummerCoeffs::rescale(RangeTriple T) const
{
  return {1.0, T.T1 / std::sqrt(d21 * d31), T.T2 / std::sqrt(d21 * d32), T.T3 / std::sqrt(d31 * d32)};
}

RangeTriple KummerCoeffs::unscale(const Homog& t) const
{
  return {t[1] / t[0] * std::sqrt(d21 * d31), t[2] / t[0] * std::sqrt(d21 * d32), t[3] / t[0] * std::sqrt(d31 * d32)};
}

double KummerCoeffs::F(const Homog& t) const
{
  const double s0 = t[0] * t[0];
  const double s1 = t[1] * t[1];
  const double s2 = t[2] * t[2];
  const double s3 = t[3] * t[3];
  return s0 * s0 + s1 * s1 + s2 * s2 + s3 * s3
       - 2.0 * a * (s1 * s2 + s0 * s3)
       + 2.0 * b * (s1 * s3 + s0 * s2)
       - 2.0 * c * (s2 * s3 + s0 * s1);
}

Homog KummerCoeffs::gradient(const Homog& t) const
{
  const auto kap = couplings(*this);
  Homog g{};
  for (int i = 0; i < 4; ++i) {
    g[i] = 4.0 * t[i] * t[i] * t[i];
    for (int j = 0; j < 4; ++j) g[i] += 2.0 * kap[i][j] * t[i] * t[j] * t[j];
  }
  return g;
}

Mat4 KummerCoeffs::hessian(const Homog& t) const
{
  const auto kap = couplings(*this);
  Mat4 h{};
  for (int i = 0; i < 4; ++i) {
    h[i][i] = 12.0 * t[i] * t[i];
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      h[i][i] += 2.0 * kap[i][j] * t[j] * t[j];
      h[i][j] = 4.0 * kap[i][j] * t[i] * t[j];
    }
  }
  return h;
}

KummerCoeffs homogeneous_form(const SensorConfig& config)
{
  require_general(config);
  const Vec2 d21 = config.planar(1) - config.planar(0);
  const Vec2 d31 = config.planar(2) - config.planar(0);
  const Vec2 d32 = config.planar(2) - config.planar(1);
  KummerCoeffs k;
  k.d21 = norm(d21);
  k.d31 = norm(d31);
  k.d32 = norm(d32);
  k.a = dot(d32, d31) / (k.d32 * k.d31);
  k.b = dot(d32, d21) / (k.d32 * k.d21);
  k.c = dot(d31, d21) / (k.d31 * k.d21);
  return k;
}

std::string to_string(Locus l)
{
  const std::string i = std::to_string(l.index);
  switch (l.kind) {
  case LocusKind::HalfLinePlus: return "r" + i + "+";
  case LocusKind::HalfLineMinus: return "r" + i + "-";
  case LocusKind::Segment: return "r" + i + "^0";
  case LocusKind::Arc: return "Gamma" + i;
  }
  return "?";
}

Locus parse_locus(const std::string& label)
{
  for (const Locus& l : all_loci()) {
    if (to_string(l) == label) return l;
  }
  if (label.size() == 3 && label[0] == 'r' && label[2] == '0' && label[1] >= '1' && label[1] <= '3')
    return {LocusKind::Segment, label[1] - '0'};
  if (label.size() == 2 && label[0] == 'G' && label[1] >= '1' && label[1] <= '3')
    return {LocusKind::Arc, label[1] - '0'};
  throw Error(ErrorCode::UnknownLabel, "unknown locus label '" + label + "'");
}

std::vector<Locus> all_loci()
{
  std::vector<Locus> out;
  for (int i = 1; i <= 3; ++i) {
    out.push_back({LocusKind::HalfLinePlus, i});
    out.push_back({LocusKind::HalfLineMinus, i});
    out.push_back({LocusKind::Segment, i});
  }
  for (int i = 1; i <= 3; ++i) out.push_back({LocusKind::Arc, i});
  return out;
}

bool ConicArc::contains(RangeTriple T, double tol) const
{
  if (std::abs(plane.eval(T)) > tol) return false;
  for (const Plane& b : bounds)
    if (b.eval(T) < -tol) return false;
  return true;
}

ConicArc conic_arc(const SensorConfig& config, Locus locus)
{
  require_general(config);
  if (locus.index < 1 || locus.index > 3) throw Error(ErrorCode::UnknownLabel, "locus index out of range");
  const auto m = planar_receivers(config);
  ConicArc arc;
  arc.locus = locus;

  if (locus.kind == LocusKind::Arc) {
    const int i = locus.index - 1;
    int j = 0;
    int k = 0;
    others(i, j, k);
    const double djk = distance(m[j], m[k]);
    const double dik = distance(m[i], m[k]);
    const double dij = distance(m[i], m[j]);
    arc.plane.n[i] = -djk;
    arc.plane.n[j] = dik;
    arc.plane.n[k] = dij;
    // Inscribed angle: the arc sees the chord m_j m_k at pi minus the angle at m_i.
    const double cos_i = dot(m[j] - m[i], m[k] - m[i]) / (dij * dik);
    arc.conic.A[j][j] = 1.0;
    arc.conic.A[k][k] = 1.0;
    arc.conic.A[j][k] = cos_i;
    arc.conic.A[k][j] = cos_i;
    arc.conic.c = -djk * djk;
    Plane bj;
    bj.n[j] = 1.0;
    Plane bk;
    bk.n[k] = 1.0;
    arc.bounds = {bj, bk};
    return arc;
  }

  const LocusGeometry g = locus_geometry(locus);
  const double dpq = distance(m[g.p], m[g.q]);
  const double dpo = distance(m[g.p], m[g.o]);
  Vec2 u;
  if (locus.kind == LocusKind::Segment) {
    u = (m[g.q] - m[g.p]) / dpq;
    arc.plane.n[g.p] = 1.0;
    arc.plane.n[g.q] = 1.0;
    arc.plane.offset = -dpq;
  } else {
    u = (m[g.p] - m[g.q]) / dpq;
    arc.plane.n[g.p] = 1.0;
    arc.plane.n[g.q] = -1.0;
    arc.plane.offset = dpq;
  }
  // Along x = m_p + s u with s = T_p: T_o^2 = d_po^2 + 2 s (m_p - m_o).u + s^2.
  const double kappa = dot(m[g.p] - m[g.o], u);
  arc.conic.A[g.o][g.o] = 1.0;
  arc.conic.A[g.p][g.p] = -1.0;
  arc.conic.g[g.p] = -2.0 * kappa;
  arc.conic.c = -dpo * dpo;
  Plane bp;
  bp.n[g.p] = 1.0;
  arc.bounds.push_back(bp);
  if (locus.kind == LocusKind::Segment) {
    Plane bq;
    bq.n[g.q] = 1.0;
    arc.bounds.push_back(bq);
  }
  return arc;
}

ConicArc conic_arc(const SensorConfig& config, const std::string& label)
{
  return conic_arc(config, parse_locus(label));
}

Vec2 locus_point(const SensorConfig& config, Locus locus, double s)
{
  config.require_planar(3);
  const auto m = planar_receivers(config);
  if (locus.kind == LocusKind::Arc) {
    const int i = locus.index - 1;
    int j = 0;
    int k = 0;
    others(i, j, k);
    // Circumcenter from the perpendicular-bisector system.
    const Vec2 b = m[1] - m[0];
    const Vec2 c = m[2] - m[0];
    const double den = 2.0 * cross(b, c);
    const Vec2 center = m[0] + Vec2{(c.y * dot(b, b) - b.y * dot(c, c)) / den,
                                    (b.x * dot(c, c) - c.x * dot(b, b)) / den};
    const double R = distance(center, m[0]);
    const double two_pi = 2.0 * std::numbers::pi;
    auto angle = [&](int r) { return std::atan2(m[r].y - center.y, m[r].x - center.x); };
    const double aj = angle(j);
    double sweep = std::fmod(angle(k) - aj + 2.0 * two_pi, two_pi);
    const double ai = std::fmod(angle(i) - aj + 2.0 * two_pi, two_pi);
    if (ai < sweep) sweep -= two_pi;
    const double th = aj + s * sweep;
    return center + R * Vec2{std::cos(th), std::sin(th)};
  }
  const LocusGeometry g = locus_geometry(locus);
  if (locus.kind == LocusKind::Segment) return m[g.p] + s * (m[g.q] - m[g.p]);
  const double dpq = distance(m[g.p], m[g.q]);
  const Vec2 u = (m[g.p] - m[g.q]) / dpq;
  return m[g.p] + (s / (1.0 - s)) * dpq * u;
}

SurfaceFeatures nodes_and_tropes(const SensorConfig& config)
{
  const KummerCoeffs k = homogeneous_form(config);
  const double r21 = std::sqrt(k.d21);
  const double r31 = std::sqrt(k.d31);
  const double r32 = std::sqrt(k.d32);
  const Homog rows[4] = {{0.0, r32, r31, r21}, {r32, 0.0, r21, r31}, {r31, r21, 0.0, r32}, {r21, r31, r32, 0.0}};

  SurfaceFeatures out;
  std::vector<Plane> facets;
  for (int f = 0; f < 12; ++f) facets.push_back(conic_arc(config, facet_locus(f)).plane);
  const double s1 = std::sqrt(k.d21 * k.d31);
  const double s2 = std::sqrt(k.d21 * k.d32);
  const double s3 = std::sqrt(k.d31 * k.d32);

  for (int r = 0; r < 4; ++r) {
    const Homog base = rows[r];
    int nz[3];
    int cnt = 0;
    for (int i = 0; i < 4; ++i)
      if (base[i] != 0.0) nz[cnt++] = i;
    for (int mask = 0; mask < 4; ++mask) {
      Homog t = base;
      if (mask & 1) t[nz[1]] = -t[nz[1]];
      if (mask & 2) t[nz[2]] = -t[nz[2]];
      t = normalize_first(t);

      Node node;
      node.coords = t;
      if (mask == 0) {
        if (r == 0) node.kind = NodeKind::IdealImage;
        else {
          node.kind = NodeKind::ReceiverImage;
          node.receiver = r - 1;
        }
      }
      out.nodes.push_back(node);

      Trope tr;
      tr.coords = t;
      tr.plane.n = {t[1] / s1, t[2] / s2, t[3] / s3};
      tr.plane.offset = t[0];
      for (int f = 0; f < 12; ++f) {
        if (same_plane(tr.plane, facets[f], config.d_max())) {
          tr.preimage = facet_locus(f);
          tr.meets_image = true;
          tr.plane = facets[f];
          break;
        }
      }
      out.tropes.push_back(tr);
    }
  }
  return out;
}

Quadric ideal_cylinder(const SensorConfig& config)
{
  require_general(config);
  const Vec2 d21 = config.planar(1) - config.planar(0);
  const Vec2 d31 = config.planar(2) - config.planar(0);
  const Vec2 d32 = config.planar(2) - config.planar(1);
  const Vec2 w[3] = {d32, -d31, d21};
  Quadric q;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) q.A[i][j] = dot(w[i], w[j]);
  const double wedge = cross(d31, d32);
  q.c = -wedge * wedge;
  return q;
}

TangentCone tangent_cone(const SensorConfig& config, const Homog& node)
{
  const KummerCoeffs k = homogeneous_form(config);
  const Homog p = normalize_first(node);
  double n2 = 0.0;
  for (double v : p) n2 += v * v;
  const double scale = std::sqrt(n2);
  const Homog g = k.gradient(p);
  double gn = 0.0;
  for (double v : g) gn += v * v;
  if (std::abs(k.F(p)) > 1e-9 * std::pow(scale, 4) || std::sqrt(gn) > 1e-9 * std::pow(scale, 3))
    throw Error(ErrorCode::NotANode, "point is not a node of the surface");

  TangentCone tc;
  tc.homogeneous = k.hessian(p);
  tc.ideal = std::abs(p[0]) <= 1e-12 * scale;
  const double s[3] = {std::sqrt(k.d21 * k.d31), std::sqrt(k.d21 * k.d32), std::sqrt(k.d31 * k.d32)};
  const Mat4& H = tc.homogeneous;
  for (int i = 0; i < 3; ++i) {
    tc.affine.g[i] = 2.0 * H[0][i + 1] / s[i];
    for (int j = 0; j < 3; ++j) tc.affine.A[i][j] = H[i + 1][j + 1] / (s[i] * s[j]);
  }
  tc.affine.c = H[0][0];
  if (tc.ideal && p[1] > 0.0 && p[2] > 0.0 && p[3] > 0.0) tc.affine = ideal_cylinder(config);
  return tc;
}

double curvature_formula(const std::array<Vec2, 3>& m, Vec2 x)
{
  const Vec2 d1 = x - m[0];
  const Vec2 d2 = x - m[1];
  const Vec2 d3 = x - m[2];
  const double h1 = cross(d2, d3);
  const double h2 = cross(d3, d1);
  const double h3 = cross(d1, d2);
  const double n1 = dot(d1, d1);
  const double n2 = dot(d2, d2);
  const double n3 = dot(d3, d3);
  const double den = n1 * h1 * h1 + n2 * h2 * h2 + n3 * h3 * h3;
  return h1 * h2 * h3 * (n1 * h1 + n2 * h2 + n3 * h3) / (den * den);
}

double gaussian_curvature(const SensorConfig& config, Vec2 x)
{
  require_general(config);
  const auto m = planar_receivers(config);
  for (int i = 0; i < 3; ++i)
    if (distance(x, m[i]) <= tol::kLinear * config.d_max())
      throw Error(ErrorCode::AtReceiver, "curvature is undefined at a receiver");
  return curvature_formula(m, x);
}

const char* to_string(Q3Verdict v)
{
  switch (v) {
  case Q3Verdict::Interior: return "Interior";
  case Q3Verdict::OnFacet: return "OnFacet";
  case Q3Verdict::Outside: return "Outside";
  }
  return "Unknown";
}

std::array<double, 12> q3_residuals(double d21, double d31, double d32, RangeTriple T)
{
  const double T1 = T.T1;
  const double T2 = T.T2;
  const double T3 = T.T3;
  return {d21 - T1 + T2, d21 + T1 - T2, T1 + T2 - d21,
          d31 - T1 + T3, d31 + T1 - T3, T1 + T3 - d31,
          d32 - T2 + T3, d32 + T2 - T3, T2 + T3 - d32,
          d32 * T1 + d31 * T2 - d21 * T3,
          d32 * T1 - d31 * T2 + d21 * T3,
          -d32 * T1 + d31 * T2 + d21 * T3};
}

std::array<double, 4> q3_residuals_collinear(double d21, double d31, double d32, RangeTriple T)
{
  return {d31 - T.T1 + T.T3, d32 - T.T2 + T.T3, T.T1 + T.T2 - d21, d32 * T.T1 + d31 * T.T2 - d21 * T.T3};
}

Locus facet_locus(int facet)
{
  static const Locus table[12] = {
    {LocusKind::HalfLineMinus, 3}, {LocusKind::HalfLinePlus, 3}, {LocusKind::Segment, 3},
    {LocusKind::HalfLineMinus, 2}, {LocusKind::HalfLinePlus, 2}, {LocusKind::Segment, 2},
    {LocusKind::HalfLineMinus, 1}, {LocusKind::HalfLinePlus, 1}, {LocusKind::Segment, 1},
    {LocusKind::Arc, 3}, {LocusKind::Arc, 2}, {LocusKind::Arc, 1},
  };
  if (facet < 0 || facet >= 12) throw Error(ErrorCode::InvalidArgument, "facet index out of range");
  return table[facet];
}

Q3Report q3_membership(const SensorConfig& config, RangeTriple T)
{
  config.require_planar(3);
  Q3Report rep;
  const double scale = tol::scale_of(config.d_max(), {T.T1, T.T2, T.T3});
  if (config.collinear()) {
    const auto& c = config.canonical();
    const auto r = q3_residuals_collinear(config.distance(c[0], c[1]), config.distance(c[0], c[2]),
                                          config.distance(c[1], c[2]), to_canonical(config, T));
    rep.residuals.assign(r.begin(), r.end());
  } else {
    const auto r = q3_residuals(config.distance(0, 1), config.distance(0, 2), config.distance(1, 2), T);
    rep.residuals.assign(r.begin(), r.end());
  }
  // The circumcircle facets carry a length factor.
  bool outside = false;
  const int n = static_cast<int>(rep.residuals.size());
  for (int f = 0; f < n; ++f) {
    const bool weighted = config.collinear() ? f == 3 : f >= 9;
    const double tol = tol::kLinear * scale * (weighted ? config.d_max() : 1.0);
    if (rep.residuals[f] < -tol) outside = true;
    else if (rep.residuals[f] <= tol) rep.facets.push_back(f);
  }
  if (outside) {
    rep.verdict = Q3Verdict::Outside;
    rep.facets.clear();
  } else {
    rep.verdict = rep.facets.empty() ? Q3Verdict::Interior : Q3Verdict::OnFacet;
  }
  return rep;
}

const char* to_string(HullLabel l)
{
  switch (l) {
  case HullLabel::V0: return "V0";
  case HullLabel::V1: return "V1";
  case HullLabel::V2: return "V2";
  case HullLabel::V3: return "V3";
  case HullLabel::F123: return "F123";
  case HullLabel::F213: return "F213";
  case HullLabel::F312: return "F312";
  case HullLabel::G123: return "G123";
  case HullLabel::G213: return "G213";
  case HullLabel::G312: return "G312";
  case HullLabel::L1Plus: return "L1+";
  case HullLabel::L1Minus: return "L1-";
  case HullLabel::L2Plus: return "L2+";
  case HullLabel::L2Minus: return "L2-";
  case HullLabel::L3Plus: return "L3+";
  case HullLabel::L3Minus: return "L3-";
  case HullLabel::UnboundedEdge: return "UnboundedEdge";
  case HullLabel::NotOnBoundary: return "NotOnBoundary";
  }
  return "Unknown";
}

namespace {

HullLabel fill_label(Locus l)
{
  const int i = l.index - 1;
  switch (l.kind) {
  case LocusKind::Arc: return static_cast<HullLabel>(static_cast<int>(HullLabel::F123) + i);
  case LocusKind::Segment: return static_cast<HullLabel>(static_cast<int>(HullLabel::G123) + i);
  case LocusKind::HalfLinePlus: return static_cast<HullLabel>(static_cast<int>(HullLabel::L1Plus) + 2 * i);
  case LocusKind::HalfLineMinus: return static_cast<HullLabel>(static_cast<int>(HullLabel::L1Minus) + 2 * i);
  }
  return HullLabel::NotOnBoundary;
}

std::array<double, 3> sub(RangeTriple a, RangeTriple b) { return {a.T1 - b.T1, a.T2 - b.T2, a.T3 - b.T3}; }
double dot3(const std::array<double, 3>& a, const std::array<double, 3>& b)
{
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
std::array<double, 3> cross3(const std::array<double, 3>& a, const std::array<double, 3>& b)
{
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Patch label from the orientation signs of the wedge scalars h_i.
std::optional<HullLabel> patch_label(const std::array<Vec2, 3>& m, Vec2 x)
{
  const double o = cross(m[1] - m[0], m[2] - m[0]) > 0.0 ? 1.0 : -1.0;
  const Vec2 d[3] = {x - m[0], x - m[1], x - m[2]};
  const double h[3] = {cross(d[1], d[2]) * o, cross(d[2], d[0]) * o, cross(d[0], d[1]) * o};
  int neg = 0;
  int which = -1;
  for (int i = 0; i < 3; ++i) {
    if (h[i] < 0.0) {
      ++neg;
      which = i;
    }
  }
  if (neg == 0) return HullLabel::V0;
  if (neg == 1) return static_cast<HullLabel>(static_cast<int>(HullLabel::V1) + which);
  return std::nullopt;
}

} // namespace

HullComponent hull_boundary_classify(const SensorConfig& config, RangeTriple T)
{
  require_general(config);
  const auto m = planar_receivers(config);
  const double d = config.d_max();
  const double scale = tol::scale_of(d, {T.T1, T.T2, T.T3});
  const double lin = tol::kLinear * scale;

  // Unbounded edges T(m_p) + t (1,1,1), t > 0.
  for (int p = 0; p < 3; ++p) {
    const RangeTriple P = forward3(config, m[p]);
    const auto r = sub(T, P);
    const double t = (r[0] + r[1] + r[2]) / 3.0;
    const double off = std::sqrt(std::pow(r[0] - t, 2) + std::pow(r[1] - t, 2) + std::pow(r[2] - t, 2));
    if (t > lin && off <= lin) return {HullLabel::UnboundedEdge, false, p};
  }

  // Curved patches: on the surface with nonnegative curvature at the preimage.
  const bool octant = T.T1 >= -lin && T.T2 >= -lin && T.T3 >= -lin;
  if (octant && std::abs(quartic_residual_scaled(config, T)) <= tol::kSurface) {
    const SolutionSet pre = invert3(config, T);
    if (!pre.empty()) {
      const Vec2 x = pre[0];
      const double kn = curvature_formula(m, x) * d * d;
      if (kn > 1e-9) {
        if (auto l = patch_label(m, x)) return {*l, true, -1};
      } else if (kn >= -1e-9) {
        // On a zero-curvature arc: take the label of the positive side.
        const double r = 1e-6 * d;
        for (int k = 0; k < 16; ++k) {
          const double th = 2.0 * std::numbers::pi * k / 16.0;
          const Vec2 y = x + r * Vec2{std::cos(th), std::sin(th)};
          if (curvature_formula(m, y) > 0.0)
            if (auto l = patch_label(m, y)) return {*l, true, -1};
        }
      }
    }
  }

  // Flat fills: the convex hull of each arc inside its trope.
  const Q3Report q3 = q3_membership(config, T);
  if (q3.verdict == Q3Verdict::OnFacet) {
    for (int f : q3.facets) {
      const Locus l = facet_locus(f);
      const ConicArc arc = conic_arc(config, l);
      const RangeTriple A = forward3(config, locus_point(config, l, 0.0));
      const RangeTriple mid = forward3(config, locus_point(config, l, 0.5));
      std::array<double, 3> edge;
      if (l.kind == LocusKind::HalfLinePlus || l.kind == LocusKind::HalfLineMinus) {
        edge = {1.0, 1.0, 1.0};
      } else {
        const RangeTriple B = forward3(config, locus_point(config, l, 1.0));
        edge = sub(B, A);
      }
      const auto side = cross3(arc.plane.n, edge);
      const double s_mid = dot3(side, sub(mid, A));
      const double s_T = dot3(side, sub(T, A));
      if (s_T * (s_mid > 0.0 ? 1.0 : -1.0) < -lin * norm3(side)) continue;

      const RangeTriple q1 = forward3(config, locus_point(config, l, 0.25));
      const RangeTriple q2 = forward3(config, locus_point(config, l, 0.75));
      const RangeTriple chord{0.5 * (q1.T1 + q2.T1), 0.5 * (q1.T2 + q2.T2), 0.5 * (q1.T3 + q2.T3)};
      const double inside = arc.conic.eval(chord) < 0.0 ? 1.0 : -1.0;
      if (inside * arc.conic.eval(T) > tol::kSurface * scale * scale) continue;
      return {fill_label(l), true, f};
    }
  }
  throw Error(ErrorCode::NotOnBoundary, "range triple is not on the hull boundary");
}

bool in_hull_inner(const SensorConfig& config, RangeTriple T)
{
  const Q3Report q3 = q3_membership(config, T);
  if (q3.verdict == Q3Verdict::Outside) return false;
  const double scale = tol::scale_of(config.d_max(), {T.T1, T.T2, T.T3});
  const double lin = tol::kLinear * scale;
  if (T.T1 < -lin || T.T2 < -lin || T.T3 < -lin) return false;
  return quartic_residual_scaled(config, T) <= tol::kSurface;
}

QuarticCoefficients sigma_square_coefficients(const std::array<Vec2, 3>& m)
{
  const Vec2 d21 = m[1] - m[0];
  const Vec2 d31 = m[2] - m[0];
  const double n21 = dot(d21, d21);
  const double rho = dot(d31, d21) / n21;
  const double al = 1.0 - rho;
  const double be = rho;
  const double ga = rho * (1.0 - rho) * n21;
  return {n21 * al * al, n21 * be * be, n21,
          n21 * 2.0 * al * be, -n21 * 2.0 * al, -n21 * 2.0 * be,
          -n21 * 2.0 * al * ga, -n21 * 2.0 * be * ga, n21 * 2.0 * ga,
          n21 * ga * ga};
}

double collinear_degeneration_check(const std::array<Vec2, 3>& m)
{
  const QuarticCoefficients q = quartic_coefficients(m);
  const QuarticCoefficients s = sigma_square_coefficients(m);
  const double d = std::max({distance(m[0], m[1]), distance(m[0], m[2]), distance(m[1], m[2])});
  double worst = 0.0;
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; j <= 4; ++j)
      for (int k = 0; k <= 4; ++k) {
        const double t1 = 0.5 * i * d;
        const double t2 = 0.5 * j * d;
        const double t3 = 0.5 * k * d;
        const double mono[10] = {std::pow(t1, 4), std::pow(t2, 4), std::pow(t3, 4),
                                 t1 * t1 * t2 * t2, t1 * t1 * t3 * t3, t2 * t2 * t3 * t3,
                                 t1 * t1, t2 * t2, t3 * t3, 1.0};
        double diff = 0.0;
        for (int c = 0; c < 10; ++c) diff += (q[c] - s[c]) * mono[c];
        worst = std::max(worst, std::abs(diff) / std::pow(d, 6));
      }
  return worst;
}

} // namespace rangeloc
