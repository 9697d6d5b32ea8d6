#include "random_configs.hpp"

#include <doctest.h>

using namespace rangeloc;
using rangeloc::testing::Sampler;

namespace {

SensorConfig unit_pair() { return validate_config(std::vector<Vec2>{{0, 0}, {1, 0}}); }

} // namespace

TEST_CASE("forward2 examples")
{
  const auto c = unit_pair();
  auto T = forward2(c, {0.5, 0.0});
  CHECK(T.T1 == doctest::Approx(0.5));
  CHECK(T.T2 == doctest::Approx(0.5));
  T = forward2(c, {0.5, std::sqrt(0.75)});
  CHECK(T.T1 == doctest::Approx(1.0));
  CHECK(T.T2 == doctest::Approx(1.0));
  T = forward2(c, {0.3, 0.4});
  CHECK(T.T1 == doctest::Approx(0.5));
  CHECK(T.T2 == doctest::Approx(0.8062258).epsilon(1e-7));
}

TEST_CASE("classify2 verdicts and facets")
{
  const auto c = unit_pair();
  auto q = classify2(c, {1, 1});
  CHECK(q.verdict == Q2Verdict::Interior);
  CHECK(q.fiber() == 2);
  q = classify2(c, {0.5, 0.5});
  CHECK(q.verdict == Q2Verdict::Boundary);
  CHECK(q.fiber() == 1);
  REQUIRE(q.facets.size() == 1);
  CHECK(q.facets[0] == 2);
  q = classify2(c, {3, 1});
  CHECK(q.verdict == Q2Verdict::Outside);
  CHECK(q.fiber() == 0);
  CHECK(q.residuals[0] < 0.0);
}

TEST_CASE("invert2 examples")
{
  const auto c = unit_pair();
  auto s = invert2(c, {1, 1});
  REQUIRE(s.size() == 2);
  CHECK(s[0].x == doctest::Approx(0.5));
  CHECK(s[0].y == doctest::Approx(std::sqrt(0.75)));
  CHECK(s[1].y == doctest::Approx(-std::sqrt(0.75)));
  s = invert2(c, {0.5, 0.5});
  REQUIRE(s.size() == 1);
  CHECK(s[0].x == doctest::Approx(0.5));
  CHECK(s[0].y == doctest::Approx(0.0));
  s = invert2(c, {0.5, 0.8062258});
  REQUIRE(s.size() == 2);
  CHECK(s[0].x == doctest::Approx(0.3).epsilon(1e-6));
  CHECK(s[0].y == doctest::Approx(0.4).epsilon(1e-6));
  CHECK_THROWS_AS(invert2(c, {3, 1}), Error);
}

TEST_CASE("invert2 round trip and mirror symmetry")
{
  Sampler smp(21);
  for (int k = 0; k < 2000; ++k) {
    const Vec2 m1 = smp.point(3.0);
    const Vec2 m2 = m1 + std::exp(smp.uniform(-2, 2)) * smp.point(1.0);
    const auto c = validate_config(std::vector<Vec2>{m1, m2});
    const double d21 = distance(m1, m2);
    const Vec2 x = smp.source(c, 2.0, 0.05);
    const auto T = forward2(c, x);
    CHECK(classify2(c, T).verdict != Q2Verdict::Outside);
    const auto s = invert2(c, T);
    CHECK(testing::nearest(s, x) <= 1e-9 * d21 * std::max(1.0, distance(x, m1) / d21));
    if (s.size() == 2) {
      const Vec2 mid = 0.5 * (s[0] + s[1]);
      CHECK(std::abs(cross(m2 - m1, mid - m1)) <= 1e-9 * d21 * d21 * 10);
      CHECK(std::abs(dot(m2 - m1, s[0] - s[1])) <= 1e-9 * d21 * d21 * 10);
    }
  }
}

TEST_CASE("solutions merge continuously at the receiver line")
{
  const auto c = unit_pair();
  double prev = INFINITY;
  for (double y : {0.1, 0.01, 1e-3, 1e-4}) {
    const auto s = invert2(c, forward2(c, {0.3, y}));
    REQUIRE(s.size() == 2);
    const double gap = distance(s[0], s[1]);
    CHECK(gap < prev);
    CHECK(gap == doctest::Approx(2 * y).epsilon(1e-6));
    prev = gap;
  }
  CHECK(invert2(c, forward2(c, {0.3, 0.0})).size() == 1);
  CHECK(invert2(c, forward2(c, {2.5, 0.0})).size() == 1);
  CHECK(invert2(c, forward2(c, {-1.5, 0.0})).size() == 1);
}
