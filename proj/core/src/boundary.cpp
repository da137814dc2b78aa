#include "adsvol/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "conic.hpp"

namespace adsvol {

namespace {

constexpr double kPi = std::numbers::pi;

double cross(const LorentzPlaneVector& u, const LorentzPlaneVector& v) { return u.p * v.q - u.q * v.p; }

double form(const LorentzPlaneVector& u, const LorentzPlaneVector& v) { return u.p * v.p - u.q * v.q; }

bool is_null(const LorentzPlaneVector& u) {
    return std::abs(form(u, u)) <= 1e-12 * std::max(1.0, u.p * u.p + u.q * u.q) || (u.p == 0.0 && u.q == 0.0);
}

double dist(const LorentzPlaneVector& a, const LorentzPlaneVector& b) { return std::hypot(a.p - b.p, a.q - b.q); }

double polygon_scale(const BoundaryPolygon& G) {
    double s = 1.0;
    for (const auto& v : G.vertices) s = std::max({s, std::abs(v.p), std::abs(v.q)});
    return s;
}

QuadricHalfSpace lifted(const QuadricHalfSpace& h) {
    return {h.a, MVector({0.0, h.b[0], h.b[1]}, lorentz(2)), h.c};
}

QuadricHalfSpace projected(const QuadricHalfSpace& H) { return {H.a, MVector({H.b[1], H.b[2]}, lorentz(1)), H.c}; }

double qv(const QuadricHalfSpace& h, const LorentzPlaneVector& x) {
    return q_value(h, MVector({x.p, x.q}, lorentz(1)));
}

}  // namespace

Complex minkowski_angle(const LorentzPlaneVector& u, const LorentzPlaneVector& v) {
    if (is_null(u) || is_null(v)) throw Error(ErrorKind::NullTangent, "angle with a null or zero vector is undefined");
    const double uu = form(u, u), vv = form(v, v);
    const double dot = form(u, v);
    const double cr = std::abs(cross(u, v));
    const double lu = std::sqrt(std::abs(uu)), lv = std::sqrt(std::abs(vv));
    if ((uu > 0) == (vv > 0)) {
        // cosh + sinh is real; both lengths real, or both imaginary with product -lu*lv.
        const double sgn = uu > 0 ? 1.0 : -1.0;
        const double w = sgn * (dot + cr) / (lu * lv);
        if (w > 0) return {std::log(w), 0.0};
        return {std::log(-w), -kPi};
    }
    // Mixed case: cosh + sinh = -i (dot + |cross|) / (lu lv) and dot + |cross| > 0.
    return {std::log((dot + cr) / (lu * lv)), -kPi / 2};
}

Complex c2m(int m) {
    if (m < 1) throw Error(ErrorKind::InvalidInput, "c2m needs m >= 1");
    Complex ipow{1.0, 0.0};
    for (int k = 0; k < 2 * m + 1; ++k) ipow *= Complex(0.0, 1.0);
    return sphere_volume(2 * m) / (ipow * sphere_volume(2 * m + 1));
}

Complex slice_dihedral_angle(const QuadricHalfSpace& H, double t) {
    const CenterRadius cr = center_radius(H);
    const int n = H.dim() - 1;
    const double d = t - cr.v[n];
    double rf2 = 0.0;
    if (cr.cls == MetricClass::Lorentzian) rf2 = d * d + cr.r * cr.r;
    else if (cr.cls == MetricClass::Riemannian) rf2 = d * d - cr.r * cr.r;
    else throw Error(ErrorKind::Degenerate, "degenerate facet has no dihedral angle");
    if (!(rf2 > 0.0)) throw Error(ErrorKind::InvalidInput, "facet does not meet the slice");
    const Complex th = minkowski_angle({-1.0, 0.0}, {-d, -std::sqrt(rf2)});
    return face_orientation(H) == FaceOrientation::Bottom ? -th : th;
}

namespace {

struct SideGeom {
    bool conic = false;
    detail::ConicFrame f;
    int sigma = 1;
    double ta = 0.0, tb = 0.0;
    LorentzPlaneVector A, B;

    LorentzPlaneVector at(double s) const {
        if (!conic) return {A.p + s * (B.p - A.p), A.q + s * (B.q - A.q)};
        return f.point(sigma, ta + s * (tb - ta));
    }
};

SideGeom geometry(const BoundaryPolygon& G, int i) {
    const int k = G.size();
    SideGeom g;
    g.A = G.vertices[static_cast<size_t>(i)];
    g.B = G.vertices[static_cast<size_t>((i + 1) % k)];
    const auto& side = G.sides[static_cast<size_t>(i)];
    if (side.kind == PolygonSide::Kind::Conic && side.h.a != 0.0) {
        g.conic = true;
        g.f = detail::ConicFrame::of(side.h);
        const auto la = g.f.locate(g.A), lb = g.f.locate(g.B);
        if (la.first != lb.first)
            throw Error(ErrorKind::InvalidInput, "conic side " + std::to_string(i) + " joins two different branches");
        g.sigma = la.first;
        g.ta = la.second;
        g.tb = lb.second;
        if (g.ta == g.tb) throw Error(ErrorKind::InvalidInput, "conic side " + std::to_string(i) + " has zero length");
    } else if (dist(g.A, g.B) == 0.0) {
        throw Error(ErrorKind::InvalidInput, "side " + std::to_string(i) + " has zero length");
    }
    return g;
}

QuadricHalfSpace segment_line(const LorentzPlaneVector& A, const LorentzPlaneVector& B) {
    const double dp = B.p - A.p, dq = B.q - A.q;
    const double B1 = -dq, B2 = -dp;
    return {0.0, MVector({B1, B2}, lorentz(1)), -(B1 * A.p - B2 * A.q)};
}

}  // namespace

std::vector<LorentzPlaneVector> side_points(const BoundaryPolygon& G, int i, int count) {
    const SideGeom g = geometry(G, i);
    std::vector<LorentzPlaneVector> out;
    for (int k = 0; k < count; ++k) out.push_back(g.at(count == 1 ? 0.0 : static_cast<double>(k) / (count - 1)));
    return out;
}

std::pair<LorentzPlaneVector, LorentzPlaneVector> side_tangents(const BoundaryPolygon& G, int i) {
    const SideGeom g = geometry(G, i);
    if (!g.conic) {
        const LorentzPlaneVector d{g.B.p - g.A.p, g.B.q - g.A.q};
        return {d, {-d.p, -d.q}};
    }
    const double dir = g.tb > g.ta ? 1.0 : -1.0;
    const auto da = g.f.deriv(g.sigma, g.ta), db = g.f.deriv(g.sigma, g.tb);
    return {{dir * da.p, dir * da.q}, {-dir * db.p, -dir * db.q}};
}

int orientation(const BoundaryPolygon& G) {
    double area = 0.0;
    for (int i = 0; i < G.size(); ++i) {
        const auto pts = side_points(G, i, 33);
        for (size_t k = 0; k + 1 < pts.size(); ++k) area += cross(pts[k], pts[k + 1]);
    }
    if (area == 0.0) throw Error(ErrorKind::InvalidInput, "polygon has zero area");
    return area > 0 ? 1 : -1;
}

BoundaryPolygon prepared(const BoundaryPolygon& G0) {
    BoundaryPolygon G = G0;
    const int k = G.size();
    if (k < 2 || static_cast<int>(G.sides.size()) != k)
        throw Error(ErrorKind::InvalidInput, "polygon needs at least two vertices and one side per vertex");
    const double sc = polygon_scale(G);
    for (int i = 0; i < k; ++i) {
        auto& side = G.sides[static_cast<size_t>(i)];
        const auto& A = G.vertices[static_cast<size_t>(i)];
        const auto& B = G.vertices[static_cast<size_t>((i + 1) % k)];
        if (side.kind == PolygonSide::Kind::Segment) {
            side.h = segment_line(A, B);
        } else {
            if (side.h.dim() != 2) throw Error(ErrorKind::InvalidInput, "conic side needs b with two entries");
            const double tol = 1e-8 * (std::abs(side.h.a) * sc * sc + std::sqrt(norm2_euclid(side.h.b)) * sc +
                                       std::abs(side.h.c));
            if (std::abs(qv(side.h, A)) > tol || std::abs(qv(side.h, B)) > tol)
                throw Error(ErrorKind::InvalidInput, "vertex off the conic of side " + std::to_string(i));
        }
        if (metric_class(side.h) == MetricClass::Degenerate) {
            if (side.kind == PolygonSide::Kind::Segment)
                throw Error(ErrorKind::NullTangent, "side " + std::to_string(i) + " is lightlike");
            throw Error(ErrorKind::Degenerate, "side " + std::to_string(i) + " lies on a degenerate conic");
        }
    }
    const int orient = orientation(G);
    double diam = 0.0;
    for (const auto& a : G.vertices)
        for (const auto& b : G.vertices) diam = std::max(diam, dist(a, b));
    for (int i = 0; i < k; ++i) {
        const SideGeom g = geometry(G, i);
        const auto m = g.at(0.5), m2 = g.at(0.5 + 1e-6);
        const LorentzPlaneVector t{m2.p - m.p, m2.q - m.q};
        const double tn = std::hypot(t.p, t.q);
        const double d = 1e-6 * std::max(diam, 1e-9);
        const LorentzPlaneVector in{m.p - orient * d * t.q / tn, m.q + orient * d * t.p / tn};
        auto& h = G.sides[static_cast<size_t>(i)].h;
        if (qv(h, in) > 0.0) h = complement(h);
    }
    return G;
}

std::vector<Complex> vertex_angles(const BoundaryPolygon& G) {
    const int k = G.size();
    const int orient = orientation(G);
    std::vector<Complex> out;
    for (int i = 0; i < k; ++i) {
        const auto u = side_tangents(G, (i + k - 1) % k).second;
        const auto v = side_tangents(G, i).first;
        if (is_null(u) || is_null(v))
            throw Error(ErrorKind::NullTangent, "lightlike tangent at vertex " + std::to_string(i));
        const double turn = cross({-u.p, -u.q}, v) * orient;
        if (turn > 0) out.push_back(minkowski_angle(u, v));
        else out.push_back(Complex(0.0, -kPi) + minkowski_angle({-u.p, -u.q}, v));
    }
    return out;
}

BoundaryVolumeResult polygon_volume(const BoundaryPolygon& G0) {
    const BoundaryPolygon G = prepared(G0);
    const auto th = vertex_angles(G);
    Complex sum{0.0, 0.0};
    for (const auto& t : th) sum += t;
    const int k = G.size();
    const double resid = std::abs(sum.imag() + (k - 2) * kPi);
    if (resid > 1e-9)
        throw Error(ErrorKind::ConventionViolation,
                    "vertex angles do not sum to -(k-2) pi i (residual " + std::to_string(resid) + ")");
    BoundaryVolumeResult r;
    r.value = sum.real();
    r.angle_sum = sum;
    r.abs_err = 1e-12 * k * (1.0 + std::abs(sum.real()));
    r.method = BoundaryVolumeResult::Method::Polygon;
    return r;
}

GoodPolytope lift_polytope(const BoundaryPolygon& G0) {
    const BoundaryPolygon G = prepared(G0);
    const int k = G.size();
    double plo = INFINITY, phi = -INFINITY, qlo = INFINITY, qhi = -INFINITY;
    std::vector<std::vector<LorentzPlaneVector>> pts;
    for (int i = 0; i < k; ++i) {
        pts.push_back(side_points(G, i, 65));
        for (const auto& x : pts.back()) {
            plo = std::min(plo, x.p);
            phi = std::max(phi, x.p);
            qlo = std::min(qlo, x.q);
            qhi = std::max(qhi, x.q);
        }
    }
    const double sc = polygon_scale(G);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const auto& h = G.sides[static_cast<size_t>(j)].h;
            const double tol = 1e-9 * (std::abs(h.a) * sc * sc + std::sqrt(norm2_euclid(h.b)) * sc + std::abs(h.c));
            for (size_t m = 1; m + 1 < pts[static_cast<size_t>(i)].size(); ++m)
                if (qv(h, pts[static_cast<size_t>(i)][m]) > tol)
                    throw Error(ErrorKind::LiftConstruction,
                                "polygon is not the intersection of its side half-spaces (side " + std::to_string(i) +
                                    " leaves side " + std::to_string(j) + ")");
        }
    // Slabs keep the lift bounded. Shrink them until the x0 = 0 trace is the polygon alone;
    // far pieces of the side half-spaces would otherwise leak into the lift.
    double frac = 0.25, pad = 1.0;
    for (int attempt = 0;; ++attempt) {
        const double mp = frac * (phi - plo) + pad, mq = frac * (qhi - qlo) + pad;
        std::vector<QuadricHalfSpace> hs;
        for (const auto& s : G.sides) hs.push_back(s.h);
        const auto S1 = lorentz(1);
        hs.push_back({0.0, MVector({-1, 0}, S1), plo - mp});
        hs.push_back({0.0, MVector({1, 0}, S1), -(phi + mp)});
        hs.push_back({0.0, MVector({0, 1}, S1), qlo - mq});
        hs.push_back({0.0, MVector({0, -1}, S1), -(qhi + mq)});
        bool same = false;
        try {
            const auto trace = polygon_from_halfspaces(hs);
            same = trace.size() == k;
            for (const auto& v : G.vertices) {
                bool hit = false;
                for (const auto& w : trace.vertices)
                    hit = hit || std::hypot(v.p - w.p, v.q - w.q) <= 1e-7 * (1.0 + sc);
                same = same && hit;
            }
        } catch (const Error&) {
        }
        if (same) {
            plo -= mp;
            phi += mp;
            qlo -= mq;
            qhi += mq;
            break;
        }
        if (attempt == 40) throw Error(ErrorKind::LiftConstruction, "side half-spaces meet away from the polygon");
        frac *= 0.5;
        pad *= 0.5;
    }
    const double R = 1.25 * std::max(std::abs(plo), std::abs(phi)) + 1.0;
    const double T = std::max(std::abs(qlo), std::abs(qhi));
    const auto S = lorentz(2);
    GoodPolytope P;
    P.ambient_dim = 3;
    for (const auto& s : G.sides) P.facets.push_back(lifted(s.h));
    P.facets.push_back({0.0, MVector({0, -1, 0}, S), plo});
    P.facets.push_back({0.0, MVector({0, 1, 0}, S), -phi});
    P.facets.push_back({0.0, MVector({0, 0, 1}, S), qlo});
    P.facets.push_back({0.0, MVector({0, 0, -1}, S), -qhi});
    P.facets.push_back({1.0, MVector::zero(S), -R * R});
    const double X = std::sqrt(R * R + T * T) * 1.001;
    P.upper = SheetExtent::bounded(Box{{-X, plo, qlo}, {X, phi, qhi}});
    P.lower = SheetExtent::empty();
    return P;
}

BoundaryVolumeResult boundary_volume_via_3d(const BoundaryPolygon& G, const VolumeOptions& opt) {
    const GoodPolytope P = lift_polytope(G);
    const ComplexVolume V = volume(P, opt);
    const Complex c = c2m(1);
    BoundaryVolumeResult r;
    r.method = BoundaryVolumeResult::Method::Lift;
    r.value = (c * V.value).real();
    r.abs_err = std::abs(c) * V.abs_err;
    return r;
}

BoundaryPolygon transport_polygon(const IsometryWord& g, const BoundaryPolygon& G0) {
    BoundaryPolygon G = prepared(G0);
    for (const auto& m : g.moves) {
        check_primitive(m, 3);
        if (std::holds_alternative<InversionJ>(m) || std::holds_alternative<InversionJminus>(m)) {
            const double sc = polygon_scale(G);
            int sign = 0;
            for (int i = 0; i < G.size(); ++i)
                for (const auto& x : side_points(G, i, 65)) {
                    const double n2 = x.p * x.p - x.q * x.q;
                    const int s = n2 > 1e-9 * sc * sc ? 1 : (n2 < -1e-9 * sc * sc ? -1 : 0);
                    if (s == 0 || (sign != 0 && s != sign))
                        throw Error(ErrorKind::InvalidInput, "polygon meets the light cone of an inversion");
                    sign = s;
                }
        }
        BoundaryPolygon H;
        for (const auto& v : G.vertices) {
            const SignedPoint y = apply_point(m, SignedPoint{MVector({0.0, v.p, v.q}, lorentz(2)), 1});
            H.vertices.push_back({y.x[1], y.x[2]});
        }
        for (const auto& s : G.sides) {
            QuadricHalfSpace h = projected(apply_halfspace(m, lifted(s.h)));
            const double sc = std::max({std::abs(h.a), std::abs(h.c), std::sqrt(norm2_euclid(h.b))});
            PolygonSide ns;
            if (std::abs(h.a) <= 1e-14 * sc) {
                ns.kind = PolygonSide::Kind::Segment;
                h.a = 0.0;
            } else {
                ns.kind = PolygonSide::Kind::Conic;
            }
            ns.h = h;
            H.sides.push_back(ns);
        }
        G = prepared(H);
    }
    return G;
}

CorrespondencePair correspondence_check(const GoodPolytope& P2, const VolumeOptions& opt) {
    if (P2.ambient_dim != 2) throw Error(ErrorKind::InvalidInput, "correspondence check needs ambient dimension 2");
    const VolumeReport rep = volume_report(P2, opt);
    if (rep.lower.present)
        throw Error(ErrorKind::InvalidInput, "correspondence check needs an empty lower-sheet portion");
    CorrespondencePair out;
    out.rhs = -rep.total.value.real();
    out.abs_err = rep.total.abs_err;
    if (!rep.upper.present) return out;
    if (rep.total.value == Complex(0.0, 0.0) && rep.upper.plan.intervals.empty()) return out;
    BoundaryPolygon G;
    try {
        G = polygon_from_halfspaces(P2.facets);
    } catch (const Error& e) {
        if (std::string(e.what()).find("empty") != std::string::npos) return out;
        throw;
    }
    const auto r = polygon_volume(G);
    out.lhs = r.value;
    out.abs_err += r.abs_err;
    return out;
}

}  // namespace adsvol
