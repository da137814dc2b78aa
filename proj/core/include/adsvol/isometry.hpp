#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "adsvol/model.hpp"

namespace adsvol {

/// Linear map of (x1..xn) preserving the form, identity on x0. Row-major n x n.
struct LinearFix0 {
    int n = 0;
    std::vector<double> m;
};
struct Translation {
    MVector w;  ///< w[0] must be 0
};
struct Similarity {
    double lambda = 1.0;
};
struct InversionJ {};
struct InversionJminus {};

using PrimitiveIsometry = std::variant<LinearFix0, Translation, Similarity, InversionJ, InversionJminus>;

struct IsometryWord {
    std::vector<PrimitiveIsometry> moves;  ///< applied front to back
};

enum IsometryClass : unsigned {
    kLinear = 1u << 0,
    kTranslation = 1u << 1,
    kSimilarity = 1u << 2,
    kInversionJ = 1u << 3,
    kInversionJminus = 1u << 4,
    kAllClasses = 0x1fu,
};

/// Lorentz boost of rapidity eta in the (x_i, x_n) plane, with optional reflections of x1..x_{n-1} and x_n.
LinearFix0 boost(int n, int axis, double eta);
void check_primitive(const PrimitiveIsometry& g, int ambient_dim);

SignedPoint apply_point(const PrimitiveIsometry& g, const SignedPoint& p);
SignedPoint apply_point(const IsometryWord& g, const SignedPoint& p);
/// Batch-mode application: nullopt when a step lands on the boundary at infinity.
std::optional<SignedPoint> try_apply_point(const IsometryWord& g, const SignedPoint& p);

QuadricHalfSpace apply_halfspace(const PrimitiveIsometry& g, const QuadricHalfSpace& H);
QuadricHalfSpace apply_halfspace(const IsometryWord& g, const QuadricHalfSpace& H);

PrimitiveIsometry invert(const PrimitiveIsometry& g);
IsometryWord invert_word(const IsometryWord& g);
/// Word acting as g1 followed by g2.
IsometryWord compose(const IsometryWord& g1, const IsometryWord& g2);

int inversion_count(const IsometryWord& g);
unsigned class_of(const PrimitiveIsometry& g);
const char* type_name(const PrimitiveIsometry& g);

/// Deterministic random word of 1..max_len moves drawn from the classes in mask, with at most 2 inversions.
IsometryWord random_isometry(std::uint64_t seed, unsigned mask, int ambient_dim, int max_len = 3);

/// Image of a box on a sheet: nullopt if the image is unbounded (inversion of a box meeting x^2 = 0).
struct SheetBox {
    Box box;
    int h = 1;
};
std::optional<SheetBox> transport_box(const PrimitiveIsometry& g, const SheetBox& b);

/// Image polytope with transported facets and sheet extents. Extents become Unknown when a box image is unbounded.
GoodPolytope transport_polytope(const IsometryWord& g, const GoodPolytope& P);
/// True when both sheet extents of the image are known (Empty or Bounded).
bool extents_known(const GoodPolytope& P);

/// Word whose inversions are each preceded by a translation that moves the current extent boxes
/// off the light cone of the origin (shift by box diameter plus margin). At most max_inversions inversions.
IsometryWord random_bounded_word(std::uint64_t seed, const GoodPolytope& P, int max_inversions = 2);

}  // namespace adsvol
