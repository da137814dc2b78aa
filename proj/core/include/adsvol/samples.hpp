#pragma once

#include <cstdint>

#include "adsvol/boundary.hpp"

namespace adsvol {

/// Half-space a[(x - v)^2 - s] <= 0 on the upper sheet.
QuadricHalfSpace sphere_halfspace(double a, const MVector& v, double s);
/// lo <= x_k <= hi as two side planes, appended to P.
void add_slab(GoodPolytope& P, int k, double lo, double hi);

/// {x^2 <= -1, 1 <= x2 <= t} in ambient 3.
GoodPolytope cylinder(double t = 2.0);
/// Same cylinder in ambient 4.
GoodPolytope cylinder4(double t = 2.0);
/// {x^2 <= 0, 0 <= x2 <= t1} in ambient 3: a light-cone facet, not a good polytope.
GoodPolytope lightcone_polytope(double t1 = 1.0);

/// Random bounded good polytope in ambient 2 or 3 with a scanned and certified box and nonzero volume.
GoodPolytope random_good_polytope(std::uint64_t seed, int ambient_dim);

/// Straight-edged convex polygon with k vertices inside x^2 > 0.
BoundaryPolygon random_straight_polygon(std::uint64_t seed, int k);
/// Rectangle cut by one or two conics, inside x^2 > 0, with at least one conic side.
BoundaryPolygon random_conic_polygon(std::uint64_t seed);
/// Word of boundary-preserving moves with exactly one inversion, applied first.
IsometryWord random_boundary_word(std::uint64_t seed);

}  // namespace adsvol
