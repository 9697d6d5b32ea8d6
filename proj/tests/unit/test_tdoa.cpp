#include "random_configs.hpp"

#include <doctest.h>

using namespace rangeloc;
using rangeloc::testing::Sampler;

TEST_CASE("tau_map examples")
{
  const auto c = testing::unit_right_triangle();
  auto t = tau_map(c, {0.3, 0.4});
  CHECK(t.tau1 == doctest::Approx(-0.1708204).epsilon(1e-6));
  CHECK(t.tau2 == doctest::Approx(0.1354058).epsilon(1e-6));
  t = tau_map(c, {0.5, 0.5});
  CHECK(std::abs(t.tau1) <= 1e-15);
  CHECK(std::abs(t.tau2) <= 1e-15);
  t = tau_map(c, {0, -1});
  CHECK(t.tau1 == doctest::Approx(-1.0));
}

TEST_CASE("P2 membership")
{
  const auto c = testing::unit_right_triangle();
  auto r = p2_membership(c, {0, 0});
  CHECK(r.inside);
  CHECK_FALSE(r.boundary);
  CHECK(r.residuals.size() == 6);
  CHECK_FALSE(p2_membership(c, {2, 0}).inside);
  r = p2_membership(c, {-1, -0.5857864});
  CHECK(r.boundary);
  CHECK(r.facets == std::vector<int>{1});
  CHECK(p2_membership(testing::collinear_half(), {0, 0}).residuals.size() == 4);

  Sampler smp(71);
  for (int k = 0; k < 1000; ++k) {
    const auto cfg = smp.general();
    CHECK(p2_membership(cfg, tau_map(cfg, smp.source(cfg))).inside);
  }
}

TEST_CASE("tdoa coefficient examples")
{
  const auto c = testing::unit_right_triangle();
  auto k = tdoa_coeffs(c, {0, 0});
  CHECK(k.a == doctest::Approx(-1.0));
  k = tdoa_coeffs(c, {-0.1708204, 0.1354058});
  CHECK(k.a == doctest::Approx(-0.8770460).epsilon(1e-6));
  CHECK(k.v.t > 0.0);
  CHECK(k.D3L0.t == 0.0);
  CHECK_THROWS_AS(tdoa_coeffs(testing::collinear_half(), {0, 0}), Error);

  Sampler smp(72);
  for (int i = 0; i < 500; ++i) {
    const auto cfg = smp.general();
    const PseudorangePair tau{smp.uniform(-1, 1) * cfg.d_max(), smp.uniform(-1, 1) * cfg.d_max()};
    CHECK(tdoa_coeffs(cfg, tau).a == doctest::Approx(ellipse_value(cfg, tau)).scale(std::pow(cfg.d_max(), 4)));
  }
}

TEST_CASE("ellipse is tangent to the six facet lines")
{
  Sampler smp(73);
  for (int k = 0; k < 200; ++k) {
    const auto c = smp.general();
    const double d4 = std::pow(c.d_max(), 4);
    const auto tp = tangency_points(c);
    REQUIRE(tp.size() == 6);
    for (const auto& p : tp) {
      CHECK(std::abs(ellipse_value(c, p)) <= 1e-10 * d4);
      const auto r = p2_membership(c, p);
      CHECK(r.boundary);
    }
    // Restricted to each facet line, E has a double root.
    const double d21 = c.distance(0, 1), d31 = c.distance(0, 2), d32 = c.distance(1, 2);
    const PseudorangePair base[6] = {{d31, 0}, {-d31, 0}, {0, d32}, {0, -d32}, {0, d21}, {0, -d21}};
    const PseudorangePair dir[6] = {{0, 1}, {0, 1}, {1, 0}, {1, 0}, {1, 1}, {1, 1}};
    for (int f = 0; f < 6; ++f) {
      auto at = [&](double s) { return ellipse_value(c, {base[f].tau1 + s * dir[f].tau1, base[f].tau2 + s * dir[f].tau2}); };
      const double e0 = at(0), e1 = at(1), em = at(-1);
      const double A = 0.5 * (e1 + em) - e0, B = 0.5 * (e1 - em), C = e0;
      CHECK(std::abs(B * B - 4 * A * C) / std::pow(c.d_max(), 8) <= 1e-10);
    }
  }
}

TEST_CASE("invert_tdoa examples")
{
  const auto c = testing::unit_right_triangle();
  auto s = invert_tdoa(c, {-0.1708204, 0.1354058});
  REQUIRE(s.size() == 1);
  CHECK(s[0].x == doctest::Approx(0.3).epsilon(1e-6));
  CHECK(s[0].y == doctest::Approx(0.4).epsilon(1e-6));
  s = invert_tdoa(c, {0, 0});
  REQUIRE(s.size() == 1);
  CHECK(s[0].x == doctest::Approx(0.5));
  CHECK(s[0].y == doctest::Approx(0.5));
  const auto t = tau_map(c, {0, -1});
  s = invert_tdoa(c, t);
  REQUIRE(s.size() == 1);
  CHECK(s[0].x == doctest::Approx(0.0).scale(1.0));
  CHECK(s[0].y == doctest::Approx(-1.0));
  CHECK(classify_tau(c, t).label == TauLabel::BoundaryArc);
  CHECK(invert_tdoa(c, {2, 0}).empty());
}

TEST_CASE("classify_tau examples")
{
  const auto c = testing::unit_right_triangle();
  auto r = classify_tau(c, {0, 0});
  CHECK(r.label == TauLabel::EMinus);
  CHECK(r.fiber == 1);
  CHECK(classify_tau(c, {3, 3}).label == TauLabel::OutsideIm);
  const auto tp = tangency_points(c);
  for (std::size_t i = 0; i < tp.size(); ++i) {
    r = classify_tau(c, tp[i]);
    CHECK(r.label == TauLabel::TangencyPoint);
    CHECK(r.id == int(i));
    CHECK(invert_tdoa(c, tp[i]).empty());
  }
}

TEST_CASE("tdoa round trip and region law")
{
  Sampler smp(74);
  int two = 0;
  for (int k = 0; k < 3000; ++k) {
    const auto c = smp.general();
    const Vec2 x = smp.source(c, 3.0, 1e-2);
    const auto tau = tau_map(c, x);
    const auto s = invert_tdoa(c, tau);
    REQUIRE(!s.empty());
    CHECK(testing::nearest(s, x) <= 1e-8 * c.d_max());
    for (const Vec2& p : s.points) {
      const auto t2 = tau_map(c, p);
      CHECK(std::abs(t2.tau1 - tau.tau1) <= 1e-8 * c.d_max());
      CHECK(std::abs(t2.tau2 - tau.tau2) <= 1e-8 * c.d_max());
    }
    const auto r = classify_tau(c, tau);
    CHECK(r.fiber == int(s.size()));
    if (r.label == TauLabel::EMinus) CHECK(s.size() == 1);
    if (r.label == TauLabel::U1 || r.label == TauLabel::U2 || r.label == TauLabel::U3) {
      CHECK(s.size() == 2);
      ++two;
    }
  }
  CHECK(two > 100);
}

TEST_CASE("U labels contain the receiver images")
{
  Sampler smp(75);
  for (int k = 0; k < 200; ++k) {
    const auto c = smp.general();
    for (int i = 0; i < 3; ++i) {
      // Sources near m_i but off the receiver lines land in U_i.
      const Vec2 x = c.planar(i) + 1e-3 * c.d_max() * normalized(smp.point(1.0));
      const auto r = classify_tau(c, tau_map(c, x));
      if (r.fiber == 2) CHECK(r.label == static_cast<TauLabel>(static_cast<int>(TauLabel::U1) + i));
    }
  }
}

TEST_CASE("t quadratic and lambda roots correspond")
{
  Sampler smp(76);
  for (int k = 0; k < 1000; ++k) {
    const auto c = smp.general();
    const Vec2 x = smp.source(c);
    const auto tau = tau_map(c, x);
    const auto q = t_quadratic(c, tau);
    const auto T = forward3(c, x);
    double best = INFINITY;
    for (double t : q.roots) best = std::min(best, std::abs(t - T.T3));
    CHECK(best <= 1e-8 * c.d_max());
    // Quadratic equals the quartic along the fiber line.
    const FiberLine line = fiber_line(tau);
    for (double t : {0.0, 0.7, 2.0}) {
      const double val = q.A * t * t + q.B * t + q.C;
      const double quartic = quartic_residual(c, line.at(t * c.d_max()));
      const double ts = t * c.d_max();
      CHECK(q.A * ts * ts + q.B * ts + q.C == doctest::Approx(quartic).scale(std::pow(c.d_max(), 6) * 1e-3));
      (void)val;
    }
  }
}

TEST_CASE("project_pi")
{
  const auto p = project_pi({0.5, 0.8062258, 0.6708204});
  CHECK(p.tau1 == doctest::Approx(-0.1708204));
  CHECK(p.tau2 == doctest::Approx(0.1354054));
  const auto z = project_pi({4, 4, 4});
  CHECK(z.tau1 == 0.0);
  CHECK(z.tau2 == 0.0);
  const auto l = fiber_line({0.1, 0.2});
  CHECK(l.at(1.0).T3 == 1.0);
  CHECK(l.at(1.0).T1 == doctest::Approx(1.1));
}

TEST_CASE("collinear pseudorange image")
{
  const auto c = testing::collinear_half();
  // Vertices R1, R2 carry infinite fibers.
  auto r = classify_tau(c, {-0.5, 0.5});
  CHECK(r.label == TauLabel::InfiniteFiber);
  CHECK(r.fiber == kInfiniteFiber);
  CHECK_FALSE(invert_tdoa_collinear(c, {-0.5, 0.5}).has_value());
  CHECK_FALSE(invert_tdoa_collinear(c, tau_map(c, {2, 0})).has_value());
  // Open edge R1 R2 is excluded.
  CHECK(classify_tau(c, {0, 0}).label == TauLabel::OutsideIm);
  CHECK(invert_tdoa_collinear(c, {0, 0})->empty());
  // Interior: two mirrored points.
  auto t = tau_map(c, {0.5, 0.5});
  r = classify_tau(c, t);
  CHECK(r.label == TauLabel::CollinearInterior);
  auto s = invert_tdoa_collinear(c, t);
  REQUIRE(s);
  REQUIRE(s->size() == 2);
  CHECK(testing::nearest(*s, {0.5, 0.5}) <= 1e-12);
  CHECK(testing::nearest(*s, {0.5, -0.5}) <= 1e-12);
  // Segment between the outer receiver and the middle one maps to an edge.
  t = tau_map(c, {0.25, 0});
  r = classify_tau(c, t);
  CHECK(r.label == TauLabel::CollinearEdge);
  s = invert_tdoa_collinear(c, t);
  REQUIRE(s);
  REQUIRE(s->size() == 1);
  CHECK(distance((*s)[0], {0.25, 0}) <= 1e-12);
  CHECK(classify_tau(c, {0.6, 0}).label == TauLabel::OutsideIm);
  CHECK_THROWS_AS(invert_tdoa_collinear(testing::unit_right_triangle(), {0, 0}), Error);
}

TEST_CASE("collinear round trip under relabeling")
{
  Sampler smp(77);
  for (int k = 0; k < 500; ++k) {
    const Vec2 a = smp.point(3.0);
    const Vec2 dir = normalized(smp.point(1.0));
    const double L = std::exp(smp.uniform(-1, 1));
    std::vector<Vec2> pts = {a, a + L * dir, a + smp.uniform(0.1, 0.9) * L * dir};
    std::rotate(pts.begin(), pts.begin() + k % 3, pts.end());
    const auto c = validate_config(pts);
    const Vec2 x = smp.source(c, 2.0, 0.05);
    const auto tau = tau_map(c, x);
    const auto r = classify_tau(c, tau);
    const auto s = invert_tdoa_collinear(c, tau);
    REQUIRE(s);
    CHECK(r.fiber == int(s->size()));
    CHECK(testing::nearest(*s, x) <= 1e-8 * c.d_max());
  }
}
