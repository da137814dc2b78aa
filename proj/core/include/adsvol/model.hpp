#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adsvol/minkowski.hpp"

namespace adsvol {

/// Point of the model: coordinates in R^{n,1} plus sheet sign (+1 upper sheet, -1 lower sheet, 0 at infinity).
struct SignedPoint {
    MVector x;
    int h = 1;
};

/// Closed half-space {h(x) (a x^2 + b.x + c) <= 0}; b.x is the indefinite form.
struct QuadricHalfSpace {
    double a = 0.0;
    MVector b;
    double c = 0.0;

    int dim() const { return b.dim(); }
};

enum class MetricClass { Lorentzian, Riemannian, Degenerate };
enum class FaceOrientation { Top, Bottom, Side };

/// Axis-aligned box in model coordinates.
struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    int dim() const { return static_cast<int>(lo.size()); }
    bool contains(const std::vector<double>& x, double slack = 0.0) const;
    Box hull(const Box& other) const;
};

/// What is known about one sheet portion of a polytope.
struct SheetExtent {
    enum class State { Unknown, Empty, Bounded };
    State state = State::Unknown;
    Box box;

    static SheetExtent unknown() { return {}; }
    static SheetExtent empty() { return {State::Empty, {}}; }
    static SheetExtent bounded(Box b) { return {State::Bounded, std::move(b)}; }
};

struct GoodPolytope {
    int ambient_dim = 0;
    std::vector<QuadricHalfSpace> facets;
    SheetExtent upper;  ///< portion on the upper sheet (the JSON bound_box)
    SheetExtent lower;  ///< portion on the lower sheet, in lower-sheet coordinates

    Signature sig() const { return lorentz(ambient_dim - 1); }
};

struct CenterRadius {
    MVector v;
    double r = 0.0;
    MetricClass cls = MetricClass::Degenerate;
};

struct Embedding {
    MVector y;  ///< point of R^{n,2}
    int ell = 1;
};

double discriminant(const QuadricHalfSpace& H);
double discriminant_tol(const QuadricHalfSpace& H);
MetricClass metric_class(const QuadricHalfSpace& H);
/// a x^2 + b.x + c at x.
double q_value(const QuadricHalfSpace& H, const MVector& x);
bool contains(const QuadricHalfSpace& H, const SignedPoint& p);
bool contains(const GoodPolytope& P, const SignedPoint& p);
CenterRadius center_radius(const QuadricHalfSpace& H);
FaceOrientation face_orientation(const QuadricHalfSpace& H);
Embedding embed_to_hyperboloid(const SignedPoint& p);

/// Throws ErrorKind::Degenerate (naming the facets) or ErrorKind::NotPolytope.
void validate_good_polytope(const GoodPolytope& P);
/// Indices of facets whose metric is degenerate.
std::vector<int> degenerate_facets(const GoodPolytope& P);

/// Sheet swap (x,h) -> (-x,-h) applied to a facet: (a,b,c) -> (-a,b,-c).
QuadricHalfSpace sheet_swap(const QuadricHalfSpace& H);
/// Complement closure: (a,b,c) -> (-a,-b,-c).
QuadricHalfSpace complement(const QuadricHalfSpace& H);
/// Representative scaled so the largest |coefficient| is 1 (positive factor only).
QuadricHalfSpace normalized(const QuadricHalfSpace& H);
bool same_halfspace(const QuadricHalfSpace& A, const QuadricHalfSpace& B, double tol);

/// True when the facet list contains two side planes that make the lower-sheet portion empty.
bool lower_sheet_provably_empty(const GoodPolytope& P);

const char* to_string(MetricClass c);
const char* to_string(FaceOrientation o);

}  // namespace adsvol
