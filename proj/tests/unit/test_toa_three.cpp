#include "random_configs.hpp"

#include <doctest.h>

using namespace rangeloc;
using rangeloc::testing::Sampler;

TEST_CASE("forward3 examples")
{
  const auto c = testing::unit_right_triangle();
  const auto T = forward3(c, {0.3, 0.4});
  CHECK(T.T1 == doctest::Approx(0.5));
  CHECK(T.T2 == doctest::Approx(0.8062258).epsilon(1e-7));
  CHECK(T.T3 == doctest::Approx(0.6708204).epsilon(1e-7));

  const auto eq = validate_config(std::vector<Vec2>{{0, 0}, {1, 0}, {0.5, std::sqrt(0.75)}});
  const auto Tc = forward3(eq, {0.5, std::sqrt(0.75) / 3.0});
  for (int i = 0; i < 3; ++i) CHECK(Tc[i] == doctest::Approx(0.5773503).epsilon(1e-7));

  const auto Tm = forward3(c, {0, 0});
  CHECK(Tm.T1 == 0.0);
  CHECK(Tm.T2 == 1.0);
  CHECK(Tm.T3 == 1.0);
}

TEST_CASE("jacobian rank law")
{
  const auto col = validate_config(std::vector<Vec2>{{0, 0}, {1, 0}, {0.5, 0}});
  CHECK(jacobian3(col, {2, 0}).rank == 1);
  CHECK(jacobian3(col, {2, 0}).degenerate);
  CHECK(jacobian3(col, {0.25, 0}).rank == 1);
  CHECK(jacobian3(col, {2, 0.1}).rank == 2);
  const auto tri = testing::unit_right_triangle();
  CHECK(jacobian3(tri, {0.3, 0.4}).rank == 2);
  CHECK(jacobian3(tri, {2, 0}).rank == 2);
  CHECK_THROWS_AS(jacobian3(tri, {0, 0}), Error);
}

TEST_CASE("jacobian matches central differences")
{
  Sampler smp(31);
  for (int k = 0; k < 200; ++k) {
    const auto c = smp.general();
    const Vec2 x = smp.source(c, 2.0, 0.05);
    const auto J = jacobian3(c, x);
    const double h = 1e-6 * c.d_max();
    const auto px = forward3(c, x + Vec2{h, 0});
    const auto mx = forward3(c, x - Vec2{h, 0});
    const auto py = forward3(c, x + Vec2{0, h});
    const auto my = forward3(c, x - Vec2{0, h});
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(J.rows[i].x - (px[i] - mx[i]) / (2 * h)) <= 1e-5);
      CHECK(std::abs(J.rows[i].y - (py[i] - my[i]) / (2 * h)) <= 1e-5);
      CHECK(norm(J.rows[i]) == doctest::Approx(1.0));
    }
    // Level-set circles meet transversally.
    CHECK(std::abs(cross(J.rows[0], J.rows[1])) + std::abs(cross(J.rows[0], J.rows[2])) > 0.0);
  }
}

TEST_CASE("exterior_point examples")
{
  const auto c = testing::unit_right_triangle();
  const RangeTriple T{0.5, 0.8062258, 0.6708204};
  for (int i = 0; i < 3; ++i) {
    const auto e = exterior_point(c, T, i);
    CHECK(e.position.x == doctest::Approx(0.3).epsilon(1e-6));
    CHECK(e.position.y == doctest::Approx(0.4).epsilon(1e-6));
    CHECK(e.displacement.t == doctest::Approx(-T[i]));
  }
  const auto e = exterior_point(c, {0, 1, 1}, 0);
  CHECK(e.position.x == doctest::Approx(0.0));
  CHECK(e.position.y == doctest::Approx(0.0));
  CHECK_THROWS_AS(exterior_point(testing::collinear_half(), T, 0), Error);
}

TEST_CASE("invert3 examples")
{
  const auto c = testing::unit_right_triangle();
  auto s = invert3(c, {0.5, 0.8062258, 0.6708204});
  REQUIRE(s.size() == 1);
  CHECK(s[0].x == doctest::Approx(0.3).epsilon(1e-6));
  CHECK(s[0].y == doctest::Approx(0.4).epsilon(1e-6));
  CHECK(invert3(c, {1, 1, 1}).empty());
  s = invert3(c, {0, 1, 1});
  REQUIRE(s.size() == 1);
  CHECK(std::abs(s[0].x) <= 1e-12);
  CHECK(std::abs(s[0].y) <= 1e-12);
  CHECK_THROWS_AS(invert3(testing::collinear_half(), {1, 1, 1}), Error);
}

TEST_CASE("invert3 round trip and reference independence")
{
  Sampler smp(32);
  for (int k = 0; k < 2000; ++k) {
    const auto c = smp.general();
    const Vec2 x = smp.source(c);
    const auto T = forward3(c, x);
    const auto s = invert3(c, T);
    REQUIRE(s.size() == 1);
    CHECK(distance(s[0], x) <= 1e-9 * c.d_max());
    for (int i = 0; i < 3; ++i) CHECK(distance(linear_solve(c, T, i), x) <= 1e-9 * c.d_max());
  }
}

TEST_CASE("invert3_collinear examples")
{
  const auto c = testing::collinear_half();
  auto s = invert3_collinear(c, {std::sqrt(0.5), std::sqrt(0.5), 0.5});
  REQUIRE(s.size() == 2);
  CHECK(s[0].x == doctest::Approx(0.5));
  CHECK(s[0].y == doctest::Approx(0.5));
  CHECK(s[1].x == doctest::Approx(0.5));
  CHECK(s[1].y == doctest::Approx(-0.5));
  s = invert3_collinear(c, {2, 1, 1.5});
  REQUIRE(s.size() == 1);
  CHECK(s[0].x == doctest::Approx(2.0));
  CHECK(s[0].y == doctest::Approx(0.0));
  CHECK(invert3_collinear(c, {1, 1, 1}).empty());
  CHECK_THROWS_AS(invert3_collinear(testing::unit_right_triangle(), {1, 1, 1}), Error);
}

TEST_CASE("collinear inversion with permuted labels")
{
  Sampler smp(33);
  for (int k = 0; k < 500; ++k) {
    const Vec2 a = smp.point(3.0);
    const Vec2 dir = normalized(smp.point(1.0));
    const double L = std::exp(smp.uniform(-1, 1));
    const double rho = smp.uniform(0.05, 0.95);
    std::vector<Vec2> pts = {a, a + L * dir, a + rho * L * dir};
    const int shift = k % 3;
    std::rotate(pts.begin(), pts.begin() + shift, pts.end());
    if (k % 2) std::swap(pts[0], pts[1]);
    const auto c = validate_config(pts);
    REQUIRE(c.collinear());
    const Vec2 x = smp.source(c, 2.0, 0.05);
    // Sources within the boundary band of the line are classified as on it.
    if (std::abs(cross(dir, x - a)) < 1e-3 * c.d_max()) continue;
    const auto T = forward3(c, x);
    CHECK(std::abs(compatibility_residual(c, to_canonical(c, T))) <= 1e-10 * c.d_max() * c.d_max());
    const auto s = invert3_collinear(c, T);
    REQUIRE(s.size() == 2);
    CHECK(testing::nearest(s, x) <= 1e-8 * c.d_max());
    for (const Vec2& p : s.points) {
      const auto Tp = forward3(c, p);
      for (int i = 0; i < 3; ++i) CHECK(std::abs(Tp[i] - T[i]) <= 1e-9 * c.d_max());
    }
    const auto rep = classify3(c, T);
    CHECK(rep.feasible);
    CHECK(rep.fiber == 2);
    // Source on the line gives a single point.
    const Vec2 on = a + smp.uniform(-2, 3) * L * dir;
    const auto Ton = forward3(c, on);
    const auto s1 = invert3_collinear(c, Ton);
    REQUIRE(s1.size() == 1);
    CHECK(distance(s1[0], on) <= 1e-8 * c.d_max());
  }
}

TEST_CASE("classify3 examples")
{
  const auto tri = testing::unit_right_triangle();
  auto rep = classify3(tri, forward3(tri, {0.7, -0.2}));
  CHECK(rep.feasible);
  CHECK(rep.fiber == 1);
  rep = classify3(tri, {1, 1, 1});
  CHECK_FALSE(rep.feasible);
  CHECK(rep.reason == InfeasibleReason::OffSurface);
  CHECK(rep.raw_residual == doctest::Approx(-2.0));

  const auto col = testing::collinear_half();
  rep = classify3(col, {std::sqrt(0.5), std::sqrt(0.5), 0.5});
  CHECK(rep.feasible);
  CHECK(rep.fiber == 2);
  rep = classify3(col, {-1, 1, 1});
  CHECK_FALSE(rep.feasible);
  CHECK(rep.reason == InfeasibleReason::NotInOctant);
  rep = classify3(tri, {-1, 1, 1});
  CHECK(rep.reason == InfeasibleReason::NotInOctant);
}

TEST_CASE("reference sensor is a valid index")
{
  Sampler smp(34);
  for (int k = 0; k < 50; ++k) {
    const int r = reference_sensor(smp.general());
    CHECK(r >= 0);
    CHECK(r < 3);
  }
}
