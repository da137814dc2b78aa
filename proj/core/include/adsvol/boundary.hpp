#pragma once

#include <vector>

#include "adsvol/isometry.hpp"
#include "adsvol/volume.hpp"

namespace adsvol {

/// Vector of a 2-plane with form p^2 - q^2.
struct LorentzPlaneVector {
    double p = 0.0;
    double q = 0.0;
};

/// Angle from u to v in a Lorentzian 2-plane, Im in (-pi, 0]. Throws NullTangent for null input.
Complex minkowski_angle(const LorentzPlaneVector& u, const LorentzPlaneVector& v);
/// c_{2m} = V_{2m}(S^{2m}) / (i^{2m+1} V_{2m+1}(S^{2m+1})).
Complex c2m(int m);

/// Angle between the slice x_n = t and the facet H at a slice point, signed by the facet orientation.
/// Its t-derivative is 1/r_F for a top facet and -1/r_F for a bottom facet.
Complex slice_dihedral_angle(const QuadricHalfSpace& H, double t);

/// Side of a boundary polygon. The half-space (sig (1,1), coordinates (p, q) = (x1, x2)) has the side on its
/// boundary; for a segment it is the line through the end vertices.
struct PolygonSide {
    enum class Kind { Segment, Conic };
    Kind kind = Kind::Segment;
    QuadricHalfSpace h;
};

/// Polygon on the boundary x0 = 0 of the 3-dimensional model; side i joins vertex i to vertex i+1.
struct BoundaryPolygon {
    std::vector<LorentzPlaneVector> vertices;
    std::vector<PolygonSide> sides;

    int size() const { return static_cast<int>(vertices.size()); }
};

struct BoundaryVolumeResult {
    enum class Method { Polygon, Lift };
    double value = 0.0;
    Method method = Method::Polygon;
    double abs_err = 0.0;
    Complex angle_sum{0.0, 0.0};  ///< polygon method: sum of vertex angles
};

/// Checks the chain, fills in segment half-spaces, orients conic half-spaces toward the interior.
BoundaryPolygon prepared(const BoundaryPolygon& G);
/// +1 when the chain runs counter-clockwise in the (p, q) plane, -1 otherwise.
int orientation(const BoundaryPolygon& G);
/// Points along side i from its start to its end.
std::vector<LorentzPlaneVector> side_points(const BoundaryPolygon& G, int i, int count);
/// Unit-free tangents at the ends of side i, each pointing away from its vertex along the side.
std::pair<LorentzPlaneVector, LorentzPlaneVector> side_tangents(const BoundaryPolygon& G, int i);

std::vector<Complex> vertex_angles(const BoundaryPolygon& G);
BoundaryVolumeResult polygon_volume(const BoundaryPolygon& G);

/// Bounded ambient-3 polytope whose x0 = 0 trace is G.
GoodPolytope lift_polytope(const BoundaryPolygon& G);
BoundaryVolumeResult boundary_volume_via_3d(const BoundaryPolygon& G, const VolumeOptions& opt = {});

/// Region {q_i <= 0 for all i} of the (p, q) plane as a polygon. Throws InvalidInput if it is empty,
/// unbounded or not a single disk.
BoundaryPolygon polygon_from_halfspaces(const std::vector<QuadricHalfSpace>& hs);

/// Image of G under a word; every move fixes the plane x0 = 0 as a set.
BoundaryPolygon transport_polygon(const IsometryWord& g, const BoundaryPolygon& G);

struct CorrespondencePair {
    double lhs = 0.0;  ///< V_inf,2 of the region of P2 read as a boundary polygon
    double rhs = 0.0;  ///< -V_2(P2)
    double abs_err = 0.0;
};
/// Compares the boundary volume of the region of an ambient-2 polytope with minus its volume.
CorrespondencePair correspondence_check(const GoodPolytope& P2, const VolumeOptions& opt = {});

}  // namespace adsvol
