#include "padic/geometry.hpp"

#include <algorithm>

#include "padic/error.hpp"

namespace padic {

isoceles_result isoceles_witness(const rational& x, const rational& y,
                                 const rational& z, const place& p) {
  if (x == y || y == z || x == z)
    throw error(errc::degenerate_triangle,
                "vertices must be pairwise distinct");
  std::array<rational, 3> sides{dist_p(x, y, p), dist_p(y, z, p),
                                dist_p(x, z, p)};
  std::sort(sides.begin(), sides.end());
  return {sides, sides[1] == sides[2]};
}

bool ball_contains(const ball& b, const rational& x) {
  return vp(x - b.center, b.p) >= ext_int(b.k);
}

ball_rel ball_relation(const ball& b1, const ball& b2) {
  if (b1.p != b2.p)
    throw error(errc::place_mismatch,
                "balls live at places " + to_string(b1.p.prime()) + " and " +
                    to_string(b2.p.prime()));
  ext_int d = vp(b1.center - b2.center, b1.p);
  long outer = std::min(b1.k, b2.k);
  // centers closer than the larger radius force nesting; equality of radii
  // then makes the balls identical
  if (d < ext_int(outer)) return ball_rel::disjoint;
  if (b1.k == b2.k) return ball_rel::equal;
  return b1.k > b2.k ? ball_rel::first_inside_second
                     : ball_rel::second_inside_first;
}

ball recenter(const ball& b, const rational& c_new) {
  if (!ball_contains(b, c_new))
    throw error(errc::center_outside_ball,
                "proposed center " + to_string(c_new) + " is outside");
  return {b.p, c_new, b.k};
}

rational ball_distance(const ball& b1, const ball& b2) {
  if (ball_relation(b1, b2) != ball_rel::disjoint)
    throw error(errc::balls_intersect,
                "intersecting balls have no distance");
  return dist_p(b1.center, b2.center, b1.p);
}

}  // namespace padic
