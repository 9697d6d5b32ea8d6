#include "rangeloc/geometry.hpp"

#include <Eigen/Dense>

namespace rangeloc {

double minkowski_inner(SpacetimeVec3 u, SpacetimeVec3 v)
{
  return u.x * v.x + u.y * v.y - u.t * v.t;
}

double minkowski_norm2(SpacetimeVec3 u) { return minkowski_inner(u, u); }

SpacetimeVec3 hodge_cross(SpacetimeVec3 u, SpacetimeVec3 v)
{
  // Wedge components on e2^e3, e1^e3, e1^e2 mapped through the sign table.
  const double w23 = u.y * v.t - u.t * v.y;
  const double w13 = u.x * v.t - u.t * v.x;
  const double w12 = u.x * v.y - u.y * v.x;
  return {w23, -w13, -w12};
}

double triple_form(SpacetimeVec3 u, SpacetimeVec3 v, SpacetimeVec3 w)
{
  return u.x * (v.y * w.t - v.t * w.y)
       - u.y * (v.x * w.t - v.t * w.x)
       + u.t * (v.x * w.y - v.y * w.x);
}

double minkowski_inner(SpacetimeVec4 u, SpacetimeVec4 v)
{
  return u.x * v.x + u.y * v.y + u.z * v.z - u.t * v.t;
}

double minkowski_norm2(SpacetimeVec4 u) { return minkowski_inner(u, u); }

double quad_form(SpacetimeVec4 u, SpacetimeVec4 v, SpacetimeVec4 w, SpacetimeVec4 x)
{
  Eigen::Matrix4d m;
  m << u.x, u.y, u.z, u.t,
       v.x, v.y, v.z, v.t,
       w.x, w.y, w.z, w.t,
       x.x, x.y, x.z, x.t;
  return m.determinant();
}

SpacetimeVec4 hodge_triple(SpacetimeVec4 u, SpacetimeVec4 v, SpacetimeVec4 w)
{
  // Euclidean cofactors give c with c.x = det[u; v; w; x]; flipping the
  // time slot turns that into a Minkowski inner product.
  const SpacetimeVec4 e[4] = {SpacetimeVec4::e1(), SpacetimeVec4::e2(),
                              SpacetimeVec4::e3(), SpacetimeVec4::e4()};
  double c[4];
  for (int k = 0; k < 4; ++k) c[k] = quad_form(u, v, w, e[k]);
  return {c[0], c[1], c[2], -c[3]};
}

} // namespace rangeloc
