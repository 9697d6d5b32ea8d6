#include "random_configs.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rangeloc;
using rangeloc::testing::Sampler;

namespace {

std::array<double, 3> sorted_sides(const SensorConfig& c)
{
  std::array<double, 3> s = {c.distance(0, 1), c.distance(0, 2), c.distance(1, 2)};
  std::sort(s.begin(), s.end());
  return s;
}

} // namespace

TEST_CASE("abc examples")
{
  const auto eq = abc_from_config(validate_config(std::vector<Vec2>{{0, 0}, {1, 0}, {0.5, std::sqrt(0.75)}}));
  CHECK(eq.a == doctest::Approx(0.5));
  CHECK(eq.b == doctest::Approx(-0.5));
  CHECK(eq.c == doctest::Approx(0.5));
  const auto rt = abc_from_config(testing::unit_right_triangle());
  CHECK(rt.a == doctest::Approx(0.7071068).epsilon(1e-7));
  CHECK(rt.b == doctest::Approx(-0.7071068).epsilon(1e-7));
  CHECK(std::abs(rt.c) <= 1e-15);
  CHECK_THROWS_AS(abc_from_config(testing::collinear_half()), Error);
}

TEST_CASE("cayley residual examples")
{
  CHECK(cayley_residual(0.5, -0.5, 0.5) == doctest::Approx(0.0));
  CHECK(std::abs(cayley_residual(0.7071068, -0.7071068, 0.0)) <= 1e-7);
  CHECK(std::abs(cayley_residual(std::sqrt(0.5), -std::sqrt(0.5), 0.0)) <= 1e-12);
  CHECK(cayley_residual(1, 1, 1) == 0.0);
}

TEST_CASE("random triangles lie on the Cayley surface")
{
  Sampler smp(51);
  for (int k = 0; k < 2000; ++k) {
    const auto c = smp.general();
    const auto p = abc_from_config(c);
    CHECK(std::abs(cayley_residual(p.a, p.b, p.c)) <= 1e-12);
    CHECK(b_from_ac(p.a, p.c) == doctest::Approx(p.b).epsilon(1e-10).scale(1.0));
    CHECK(p.a + p.c > 0.0);
  }
}

TEST_CASE("config_from_param examples and round trip")
{
  const auto eq = config_from_param({0.5, 0.5, 1.0});
  for (double s : sorted_sides(eq)) CHECK(s == doctest::Approx(1.0));
  CHECK_THROWS_AS(config_from_param({1.0, 0.0, 1.0}), Error);
  CHECK_THROWS_AS(config_from_param({0.1, -0.1, 1.0}), Error);
  CHECK_THROWS_AS(config_from_param({-1.0, 0.5, 1.0}), Error);
  CHECK_THROWS_AS(config_from_param({0.5, 1.0, 1.0}), Error);
  CHECK_THROWS_AS(config_from_param({0.5, 0.5, 0.0}), Error);
  try {
    config_from_param({1.0, 0.0, 1.0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidParam);
  }

  Sampler smp(52);
  for (int k = 0; k < 1000; ++k) {
    const auto c = smp.general();
    const auto abc = abc_from_config(c);
    const auto back = config_from_param({abc.a, abc.c, c.distance(0, 1)});
    CHECK(back.planar(2).y > 0.0);
    const auto s0 = sorted_sides(c);
    const auto s1 = sorted_sides(back);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(s0[i] - s1[i]) <= 1e-9 * s0[2]);
    const auto abc2 = abc_from_config(back);
    CHECK(abc2.b == doctest::Approx(b_from_ac(abc.a, abc.c)).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("collinear limits approach the Cayley nodes")
{
  // m3 approaching the segment m1 m2: angle at m3 -> pi, angles at m1, m2 -> 0.
  for (double e : {1e-3, 1e-5, 1e-7}) {
    const auto p = abc_from_config(validate_config(std::vector<Vec2>{{0, 0}, {1, 0}, {0.4, e}}));
    CHECK(p.a == doctest::Approx(-1.0).epsilon(1e-4).scale(1.0));
    CHECK(p.b == doctest::Approx(-1.0).epsilon(1e-4).scale(1.0));
    CHECK(p.c == doctest::Approx(1.0).epsilon(1e-4).scale(1.0));
  }
  // m1 between m2 and m3.
  const auto q = abc_from_config(validate_config(std::vector<Vec2>{{0, 0}, {1, 0}, {-0.7, 1e-7}}));
  CHECK(q.a == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(q.b == doctest::Approx(-1.0).epsilon(1e-5));
  CHECK(q.c == doctest::Approx(-1.0).epsilon(1e-5));
  // m2 between m1 and m3.
  const auto r = abc_from_config(validate_config(std::vector<Vec2>{{0, 0}, {1, 0}, {1.8, 1e-7}}));
  CHECK(r.a == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(r.b == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(r.c == doctest::Approx(1.0).epsilon(1e-5));
}
