#pragma once

#include <optional>
#include <vector>

#include "adsvol/volume.hpp"

namespace adsvol::detail {

/// One facet restricted to the slice x_n = t of the upper sheet.
struct SliceElem {
    enum class Kind { Circle, Line, Const };
    int facet = -1;
    Kind kind = Kind::Const;
    int a_sign = 0;     ///< circle: +1 keeps the inside, -1 the outside
    double v1 = 0.0;    ///< circle center (ambient 3)
    double rho = 0.0;   ///< circle squared radius (may be <= 0)
    double L = 0.0;     ///< line position x1 = L
    int side = 0;       ///< line: +1 means x1 <= L, -1 means x1 >= L
    bool ok = true;     ///< const: constraint satisfied
};

struct Slice {
    int dim = 3;
    double t = 0.0;
    std::vector<SliceElem> elems;
    bool empty = false;
    bool bounded = true;
};

Slice make_slice(const std::vector<QuadricHalfSpace>& facets, int ambient_dim, double t);

/// Faces of a slice; throws DecompositionRequired for an unbounded nonempty slice.
std::vector<FaceSlice> faces_of(const std::vector<QuadricHalfSpace>& facets, const Slice& s);

Complex b_of(const std::vector<FaceSlice>& faces, int ambient_dim);

/// Ordered positions of boundary features along x1 (ambient 3) or x0 (ambient 2), keyed by (facet, branch).
struct Feature {
    int facet;
    int branch;
    double pos;
};
std::vector<Feature> features(const Slice& s);

/// Signature used for combinatorial-change detection.
std::vector<int> signature(const std::vector<FaceSlice>& faces, bool nonempty);

struct Extent {
    bool nonempty = false;
    std::vector<double> lo, hi;
};
Extent extent_of(const std::vector<FaceSlice>& faces, int ambient_dim, double t);

/// Analytic events: appearance of Riemannian circles (singular) and moments where constant or line constraints change.
struct Event {
    double t;
    bool singular;
    bool exact = true;  ///< closed form, as opposed to located by bisection
};
std::vector<Event> analytic_events(const std::vector<QuadricHalfSpace>& facets, int ambient_dim);

/// Rough length scale of the facet data.
double facet_scale(const std::vector<QuadricHalfSpace>& facets);

}  // namespace adsvol::detail
