#include "adsvol/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace adsvol {

bool Box::contains(const std::vector<double>& x, double slack) const {
    for (size_t i = 0; i < lo.size(); ++i)
        if (x[i] < lo[i] - slack || x[i] > hi[i] + slack) return false;
    return true;
}

Box Box::hull(const Box& other) const {
    Box r = *this;
    for (size_t i = 0; i < lo.size(); ++i) {
        r.lo[i] = std::min(lo[i], other.lo[i]);
        r.hi[i] = std::max(hi[i], other.hi[i]);
    }
    return r;
}

double discriminant(const QuadricHalfSpace& H) { return bilinear(H.b, H.b) - 4.0 * H.a * H.c; }

double discriminant_tol(const QuadricHalfSpace& H) {
    return 1e-12 * std::max(1.0, norm2_euclid(H.b) + 4.0 * std::abs(H.a * H.c));
}

MetricClass metric_class(const QuadricHalfSpace& H) {
    const double d = discriminant(H);
    const double tol = discriminant_tol(H);
    if (d > tol) return MetricClass::Lorentzian;
    if (d < -tol) return MetricClass::Riemannian;
    return MetricClass::Degenerate;
}

double q_value(const QuadricHalfSpace& H, const MVector& x) {
    return H.a * bilinear(x, x) + bilinear(H.b, x) + H.c;
}

bool contains(const QuadricHalfSpace& H, const SignedPoint& p) {
    if (p.h == 0) throw Error(ErrorKind::BoundaryPoint, "membership is not defined at infinity");
    return p.h * q_value(H, p.x) <= 0.0;
}

bool contains(const GoodPolytope& P, const SignedPoint& p) {
    for (const auto& H : P.facets)
        if (!contains(H, p)) return false;
    return true;
}

CenterRadius center_radius(const QuadricHalfSpace& H) {
    if (H.a == 0.0) throw Error(ErrorKind::SidePlane, "a side plane has no center");
    CenterRadius out;
    out.v = (-0.5 / H.a) * H.b;
    out.r = std::sqrt(std::abs(discriminant(H))) / (2.0 * std::abs(H.a));
    out.cls = metric_class(H);
    return out;
}

FaceOrientation face_orientation(const QuadricHalfSpace& H) {
    if (H.a == 0.0) return FaceOrientation::Side;
    return H.a > 0.0 ? FaceOrientation::Top : FaceOrientation::Bottom;
}

Embedding embed_to_hyperboloid(const SignedPoint& p) {
    const MVector& x = p.x;
    const int n = x.dim() - 1;
    const double x0 = x[0];
    if (x0 == 0.0) throw Error(ErrorKind::BoundaryPoint, "x0 = 0 lies on the boundary at infinity");
    const double xx = bilinear(x, x);
    std::vector<double> y(static_cast<size_t>(n + 2));
    y[0] = (1.0 - xx) / (2.0 * x0);
    for (int i = 1; i <= n; ++i) y[static_cast<size_t>(i)] = -x[i] / x0;
    y[static_cast<size_t>(n + 1)] = (1.0 + xx) / (2.0 * x0);
    Embedding e;
    e.y = MVector(std::move(y), Signature{n, 2});
    e.ell = (x0 > 0.0 ? 1 : -1) * p.h;
    return e;
}

std::vector<int> degenerate_facets(const GoodPolytope& P) {
    std::vector<int> bad;
    for (size_t i = 0; i < P.facets.size(); ++i)
        if (metric_class(P.facets[i]) == MetricClass::Degenerate) bad.push_back(static_cast<int>(i));
    return bad;
}

void validate_good_polytope(const GoodPolytope& P) {
    if (P.ambient_dim < 2) throw Error(ErrorKind::NotPolytope, "ambient dimension must be at least 2");
    if (P.facets.empty()) throw Error(ErrorKind::NotPolytope, "a polytope needs at least one facet");
    for (size_t i = 0; i < P.facets.size(); ++i) {
        const auto& H = P.facets[i];
        if (H.b.dim() != P.ambient_dim)
            throw Error(ErrorKind::NotPolytope, "facet " + std::to_string(i) + " has wrong dimension");
        if (H.a == 0.0 && H.c == 0.0 && norm2_euclid(H.b) == 0.0)
            throw Error(ErrorKind::NotPolytope, "facet " + std::to_string(i) + " has all-zero coefficients");
        if (std::abs(H.b[0]) > 1e-12 * std::max(1.0, std::sqrt(norm2_euclid(H.b))))
            throw Error(ErrorKind::NotPolytope, "facet " + std::to_string(i) + " has nonzero x0 component of b");
    }
    const auto bad = degenerate_facets(P);
    if (!bad.empty()) {
        std::ostringstream os;
        os << "degenerate facet(s):";
        for (int i : bad) os << ' ' << i;
        os << " (light-cone type faces have no finite volume)";
        throw Error(ErrorKind::Degenerate, os.str());
    }
}

QuadricHalfSpace sheet_swap(const QuadricHalfSpace& H) { return {-H.a, H.b, -H.c}; }

QuadricHalfSpace complement(const QuadricHalfSpace& H) { return {-H.a, -H.b, -H.c}; }

QuadricHalfSpace normalized(const QuadricHalfSpace& H) {
    double m = std::max(std::abs(H.a), std::abs(H.c));
    for (double x : H.b.coords) m = std::max(m, std::abs(x));
    if (m == 0.0) return H;
    return {H.a / m, (1.0 / m) * H.b, H.c / m};
}

bool same_halfspace(const QuadricHalfSpace& A, const QuadricHalfSpace& B, double tol) {
    if (A.dim() != B.dim()) return false;
    const auto a = normalized(A), b = normalized(B);
    if (std::abs(a.a - b.a) > tol || std::abs(a.c - b.c) > tol) return false;
    for (int i = 0; i < a.dim(); ++i)
        if (std::abs(a.b[i] - b.b[i]) > tol) return false;
    return true;
}

bool lower_sheet_provably_empty(const GoodPolytope& P) {
    // Opposite parallel side planes b.x <= -c_i and -k b.x <= -c_j swap into an infeasible pair.
    for (size_t i = 0; i < P.facets.size(); ++i) {
        const auto& Hi = P.facets[i];
        if (Hi.a != 0.0) continue;
        const double ni = norm2_euclid(Hi.b);
        if (ni == 0.0) {
            if (Hi.c < 0.0) return true;  // lower sheet constraint -c <= 0 fails
            continue;
        }
        for (size_t j = i + 1; j < P.facets.size(); ++j) {
            const auto& Hj = P.facets[j];
            if (Hj.a != 0.0) continue;
            const double nj = norm2_euclid(Hj.b);
            if (nj == 0.0) continue;
            double dot = 0.0;
            for (int k = 0; k < Hi.dim(); ++k) dot += Hi.b[k] * Hj.b[k];
            if (dot >= 0.0 || std::abs(dot * dot - ni * nj) > 1e-12 * ni * nj) continue;
            const double kappa = std::sqrt(nj / ni);
            if (Hj.c / kappa + Hi.c < 0.0) return true;
        }
    }
    return false;
}

const char* to_string(MetricClass c) {
    switch (c) {
        case MetricClass::Lorentzian: return "lorentzian";
        case MetricClass::Riemannian: return "riemannian";
        case MetricClass::Degenerate: return "degenerate";
    }
    return "?";
}

const char* to_string(FaceOrientation o) {
    switch (o) {
        case FaceOrientation::Top: return "top";
        case FaceOrientation::Bottom: return "bottom";
        case FaceOrientation::Side: return "side";
    }
    return "?";
}

}  // namespace adsvol
