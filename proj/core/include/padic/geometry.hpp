#ifndef PADIC_GEOMETRY_HPP
#define PADIC_GEOMETRY_HPP

#include <array>

#include "padic/place.hpp"
#include "padic/rational.hpp"
#include "padic/valuation.hpp"

namespace padic {

// The closed p-adic ball {x in Q : vp(x - center) >= k}, radius p^(-k).
// Closed balls are all there is: the value group is discrete, so the open
// ball of radius p^(-k) is the closed ball of exponent k+1. Equality of
// balls is semantic (any member is a center); compare with ball_relation,
// not by fields.
struct ball {
  place p;
  rational center;
  long k;
};

// The three pairwise distances of a triangle, sorted ascending, plus the
// isoceles verdict (the two largest are always equal; the flag is returned
// so property tests assert it rather than assume it). Vertices must be
// pairwise distinct.
struct isoceles_result {
  std::array<rational, 3> sides;
  bool two_largest_equal;
};
isoceles_result isoceles_witness(const rational& x, const rational& y,
                                 const rational& z, const place& p);

bool ball_contains(const ball& b, const rational& x);

// Two balls at the same place are equal, nested, or disjoint. There is no
// partial-overlap arm: if the centers are within min(k1, k2) the balls nest
// by radius, otherwise they are disjoint.
enum class ball_rel { equal, first_inside_second, second_inside_first,
                      disjoint };
ball_rel ball_relation(const ball& b1, const ball& b2);

// Same ball, new center; c_new must already lie inside (every point of a
// ball is a center).
ball recenter(const ball& b, const rational& c_new);

// Distance between two disjoint balls: dist_p of any member of one to any
// member of the other, which is independent of the choice; computed from
// the centers. Intersecting balls have no distance (throws).
rational ball_distance(const ball& b1, const ball& b2);

}  // namespace padic

#endif
