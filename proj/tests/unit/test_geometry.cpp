#include "random_configs.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rangeloc;
using rangeloc::testing::Sampler;

namespace {

SpacetimeVec3 rand3(Sampler& s) { return {s.uniform(-2, 2), s.uniform(-2, 2), s.uniform(-2, 2)}; }
SpacetimeVec4 rand4(Sampler& s) { return {s.uniform(-2, 2), s.uniform(-2, 2), s.uniform(-2, 2), s.uniform(-2, 2)}; }

} // namespace

TEST_CASE("minkowski inner product signature")
{
  const auto e1 = SpacetimeVec3::e1();
  const auto e3 = SpacetimeVec3::e3();
  CHECK(minkowski_inner(e3, e3) == -1.0);
  CHECK(minkowski_inner(e1, e1) == 1.0);
  CHECK(minkowski_norm2(SpacetimeVec3{1, 1, 1}) == 1.0);
  CHECK(minkowski_norm2(SpacetimeVec4::e4()) == -1.0);
  CHECK(minkowski_norm2(SpacetimeVec4{1, 1, 1, 1}) == 2.0);
}

TEST_CASE("hodge table in R^{2,1}")
{
  const auto e1 = SpacetimeVec3::e1();
  const auto e2 = SpacetimeVec3::e2();
  const auto e3 = SpacetimeVec3::e3();
  auto eq = [](SpacetimeVec3 a, SpacetimeVec3 b) { return a.x == b.x && a.y == b.y && a.t == b.t; };
  CHECK(eq(hodge_cross(e1, e2), SpacetimeVec3{0, 0, -1}));
  CHECK(eq(hodge_cross(e1, e3), SpacetimeVec3{0, -1, 0}));
  CHECK(eq(hodge_cross(e2, e3), SpacetimeVec3{1, 0, 0}));
  CHECK(eq(hodge_cross(SpacetimeVec3{1, 2, 3}, SpacetimeVec3{1, 2, 3}), SpacetimeVec3{0, 0, 0}));
  const SpacetimeVec3 u{1, 2, 0};
  CHECK(minkowski_inner(hodge_cross(u, SpacetimeVec3{0, 1, 1}), u) == 0.0);
}

TEST_CASE("triple form is the determinant")
{
  const auto e1 = SpacetimeVec3::e1();
  const auto e2 = SpacetimeVec3::e2();
  const auto e3 = SpacetimeVec3::e3();
  CHECK(triple_form(e1, e2, e3) == 1.0);
  CHECK(triple_form(e1, e1, e3) == 0.0);
  CHECK(triple_form(SpacetimeVec3{1, 0, 0}, SpacetimeVec3{0, 1, 0}, SpacetimeVec3{1, 1, 1}) == 1.0);
}

TEST_CASE("hodge_cross is orthogonal and matches triple_form")
{
  Sampler s(11);
  for (int k = 0; k < 1000; ++k) {
    const auto u = rand3(s);
    const auto v = rand3(s);
    const auto w = rand3(s);
    const auto h = hodge_cross(u, v);
    const double sc = 64.0;
    CHECK(std::abs(minkowski_inner(h, u)) <= 1e-12 * sc);
    CHECK(std::abs(minkowski_inner(h, v)) <= 1e-12 * sc);
    CHECK(minkowski_inner(h, w) == doctest::Approx(triple_form(u, v, w)).epsilon(1e-12).scale(64));
    const auto h2 = hodge_cross(v, u);
    CHECK(h.x == -h2.x);
    CHECK(h.t == -h2.t);
  }
}

TEST_CASE("hodge_triple in R^{3,1}")
{
  Sampler s(12);
  for (int k = 0; k < 500; ++k) {
    const auto u = rand4(s);
    const auto v = rand4(s);
    const auto w = rand4(s);
    const auto x = rand4(s);
    const auto n = hodge_triple(u, v, w);
    CHECK(std::abs(minkowski_inner(n, u)) <= 1e-11);
    CHECK(std::abs(minkowski_inner(n, v)) <= 1e-11);
    CHECK(std::abs(minkowski_inner(n, w)) <= 1e-11);
    CHECK(std::abs(minkowski_inner(n, x) - quad_form(u, v, w, x)) <= 1e-11);
  }
  CHECK(quad_form(SpacetimeVec4::e1(), SpacetimeVec4::e2(), SpacetimeVec4::e3(), SpacetimeVec4::e4()) == doctest::Approx(1.0));
}

TEST_CASE("validate_config classification")
{
  const SensorConfig tri = testing::unit_right_triangle();
  CHECK(tri.kind() == ConfigClass::GeneralTriangle);
  CHECK(tri.d_max() == doctest::Approx(std::sqrt(2.0)));

  const SensorConfig col = testing::collinear_half();
  CHECK(col.kind() == ConfigClass::CollinearTriple);
  CHECK(col.rho() == doctest::Approx(0.5));

  const SensorConfig two = validate_config(std::vector<Vec2>{{0, 0}, {1, 0}});
  CHECK(two.kind() == ConfigClass::TwoReceivers);

  CHECK_THROWS_AS(validate_config(std::vector<Vec2>{{0, 0}, {0, 0}, {1, 1}}), Error);
  try {
    validate_config(std::vector<Vec2>{{0, 0}, {0, 0}, {1, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateReceiver);
  }
  try {
    validate_config(std::vector<std::vector<double>>{{0, 0}, {1, 0, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
  CHECK_THROWS_AS(validate_config(std::vector<std::vector<double>>{{0, 0}}), Error);
}

TEST_CASE("collinear canonical labels are permutation invariant")
{
  std::vector<Vec2> pts = {{0, 0}, {3, 0}, {1, 0}};
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x; });
  double rho0 = -1.0;
  do {
    const SensorConfig c = validate_config(pts);
    REQUIRE(c.collinear());
    const auto& k = c.canonical();
    CHECK(pts[k[2]].x == 1.0);
    if (rho0 < 0) rho0 = c.rho();
    CHECK(c.rho() == rho0);
  } while (std::next_permutation(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x; }));
  CHECK(rho0 == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("collinearity threshold is scale invariant")
{
  for (double s : {1e-3, 1.0, 1e4}) {
    CHECK(validate_config(std::vector<Vec2>{{0, 0}, {s, 0}, {0.5 * s, 1e-11 * s}}).collinear());
    CHECK_FALSE(validate_config(std::vector<Vec2>{{0, 0}, {s, 0}, {0.5 * s, 1e-6 * s}}).collinear());
  }
}
