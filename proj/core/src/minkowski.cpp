#include "adsvol/minkowski.hpp"

#include <cmath>
#include <numbers>

namespace adsvol {

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse:
        case ErrorKind::Config:
            return 2;
        case ErrorKind::Degenerate:
            return 3;
        case ErrorKind::DecompositionRequired:
        case ErrorKind::LiftConstruction:
            return 4;
        case ErrorKind::NullTangent:
            return 5;
        case ErrorKind::NonConvergence:
            return 6;
        default:
            return 1;
    }
}

const char* kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Config: return "config";
        case ErrorKind::SignatureMismatch: return "signature-mismatch";
        case ErrorKind::UndefinedLength: return "undefined-length";
        case ErrorKind::BoundaryPoint: return "boundary-point";
        case ErrorKind::SidePlane: return "side-plane";
        case ErrorKind::Degenerate: return "degenerate-facet";
        case ErrorKind::NotPolytope: return "not-polytope";
        case ErrorKind::DecompositionRequired: return "decomposition-required";
        case ErrorKind::Replan: return "replan";
        case ErrorKind::IllConditionedArc: return "ill-conditioned-arc";
        case ErrorKind::NullTangent: return "null-tangent";
        case ErrorKind::ConventionViolation: return "convention-violation";
        case ErrorKind::LiftConstruction: return "lift-construction";
        case ErrorKind::NonConvergence: return "non-convergence";
        case ErrorKind::InvalidInput: return "invalid-input";
    }
    return "unknown";
}

MVector::MVector(std::vector<double> c, Signature s) : coords(std::move(c)), sig(s) {
    if (dim() != sig.dim()) throw Error(ErrorKind::SignatureMismatch, "coordinate count does not match signature");
}

MVector::MVector(std::initializer_list<double> c, Signature s) : MVector(std::vector<double>(c), s) {}

MVector MVector::zero(Signature s) { return MVector(std::vector<double>(static_cast<size_t>(s.dim()), 0.0), s); }

static void require_same(const MVector& u, const MVector& v) {
    if (!(u.sig == v.sig) || u.dim() != v.dim())
        throw Error(ErrorKind::SignatureMismatch, "vectors live in different spaces");
}

MVector operator+(const MVector& u, const MVector& v) {
    require_same(u, v);
    MVector r = u;
    for (int i = 0; i < r.dim(); ++i) r[i] += v[i];
    return r;
}

MVector operator-(const MVector& u, const MVector& v) {
    require_same(u, v);
    MVector r = u;
    for (int i = 0; i < r.dim(); ++i) r[i] -= v[i];
    return r;
}

MVector operator-(const MVector& u) { return -1.0 * u; }

MVector operator*(double s, const MVector& u) {
    MVector r = u;
    for (double& x : r.coords) x *= s;
    return r;
}

double bilinear(const MVector& u, const MVector& v) {
    require_same(u, v);
    double pos = 0.0, neg = 0.0;
    for (int i = 0; i < u.dim(); ++i) {
        if (i < u.sig.plus)
            pos += u[i] * v[i];
        else
            neg += u[i] * v[i];
    }
    return pos - neg;
}

double norm2_euclid(const MVector& v) {
    double s = 0.0;
    for (double x : v.coords) s += x * x;
    return s;
}

double tol_null(const MVector& v) { return 1e-12 * std::max(1.0, norm2_euclid(v)); }

CausalClass causal_class(const MVector& v) {
    const double q = bilinear(v, v);
    const double tol = tol_null(v);
    if (q > tol) return CausalClass::Spacelike;
    if (q < -tol) return CausalClass::Timelike;
    return CausalClass::Null;
}

Complex complex_length(const MVector& v) {
    const double q = bilinear(v, v);
    switch (causal_class(v)) {
        case CausalClass::Spacelike: return {std::sqrt(q), 0.0};
        case CausalClass::Timelike: return {0.0, std::sqrt(-q)};
        case CausalClass::Null: break;
    }
    throw Error(ErrorKind::UndefinedLength, "length of a null vector is undefined");
}

double sphere_volume(int n) {
    if (n < 0) throw Error(ErrorKind::InvalidInput, "sphere dimension must be non-negative");
    double even = 2.0, odd = 2.0 * std::numbers::pi;
    if (n == 0) return even;
    if (n == 1) return odd;
    double v = 0.0;
    for (int k = 2; k <= n; ++k) {
        double& prev = (k % 2 == 0) ? even : odd;
        prev = 2.0 * std::numbers::pi / (k - 1) * prev;
        v = prev;
    }
    return v;
}

const char* to_string(CausalClass c) {
    switch (c) {
        case CausalClass::Spacelike: return "spacelike";
        case CausalClass::Timelike: return "timelike";
        case CausalClass::Null: return "null";
    }
    return "?";
}

}  // namespace adsvol
