#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "adsvol/boundary.hpp"
#include "conic.hpp"

namespace adsvol {

namespace {

using Poly = std::vector<double>;  // coefficients, lowest degree first

Poly mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, 0.0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly add(Poly a, const Poly& b, double s = 1.0) {
    if (a.size() < b.size()) a.resize(b.size(), 0.0);
    for (size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
    return a;
}

double eval(const Poly& p, double x) {
    double v = 0.0;
    for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
    return v;
}

std::vector<double> real_roots(Poly p) {
    double mx = 0.0;
    for (double c : p) mx = std::max(mx, std::abs(c));
    if (mx == 0.0) return {};
    while (!p.empty() && std::abs(p.back()) <= 1e-13 * mx) p.pop_back();
    const int deg = static_cast<int>(p.size()) - 1;
    if (deg <= 0) return {};
    if (deg == 1) return {-p[0] / p[1]};
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) C(i, deg - 1) = -p[static_cast<size_t>(i)] / p.back();
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
    Poly dp;
    for (size_t i = 1; i < p.size(); ++i) dp.push_back(static_cast<double>(i) * p[i]);
    std::vector<double> out;
    for (int i = 0; i < deg; ++i) {
        const auto z = es.eigenvalues()[i];
        if (std::abs(z.imag()) > 1e-6 * (1.0 + std::abs(z.real()))) continue;
        double x = z.real();
        for (int it = 0; it < 4; ++it) {
            const double d = eval(dp, x);
            if (d == 0.0) break;
            x -= eval(p, x) / d;
        }
        out.push_back(x);
    }
    return out;
}

struct Curve {
    int facet = 0;
    int sigma = 0;  // 0: line
    detail::ConicFrame f;
    LorentzPlaneVector p0, d;

    LorentzPlaneVector at(double t) const {
        if (sigma == 0) return {p0.p + t * d.p, p0.q + t * d.q};
        return f.point(sigma, t);
    }
    LorentzPlaneVector tangent(double t) const { return sigma == 0 ? d : f.deriv(sigma, t); }

    // Parameters where the curve meets {h = 0}.
    std::vector<double> hits(const QuadricHalfSpace& h) const {
        const double a = h.a, B1 = h.b[0], B2 = h.b[1], c = h.c;
        if (sigma == 0) {
            const Poly P{p0.p, d.p}, Q{p0.q, d.q};
            Poly g = add(mul(P, P), mul(Q, Q), -1.0);
            for (double& x : g) x *= a;
            g = add(g, P, B1);
            g = add(g, Q, -B2);
            g = add(g, Poly{c});
            return real_roots(g);
        }
        Poly pz, qz;
        const double hw = 0.5 * f.w;
        if (f.s > 0) {
            pz = {sigma * hw, f.pc, sigma * hw};
            qz = {-hw, f.qc, hw};
        } else {
            pz = {-hw, f.pc, hw};
            qz = {sigma * hw, f.qc, sigma * hw};
        }
        Poly g = add(mul(pz, pz), mul(qz, qz), -1.0);
        for (double& x : g) x *= a;
        g = add(g, mul(pz, Poly{0.0, 1.0}), B1);
        g = add(g, mul(qz, Poly{0.0, 1.0}), -B2);
        g = add(g, Poly{0.0, 0.0, c});
        std::vector<double> out;
        for (double z : real_roots(g))
            if (z > 0.0) out.push_back(std::log(z));
        return out;
    }
};

double qv(const QuadricHalfSpace& h, const LorentzPlaneVector& x) {
    return q_value(h, MVector({x.p, x.q}, lorentz(1)));
}

double qscale(const QuadricHalfSpace& h, const LorentzPlaneVector& x) {
    const double r = std::hypot(x.p, x.q);
    return std::abs(h.a) * r * r + std::sqrt(norm2_euclid(h.b)) * r + std::abs(h.c);
}

bool inside_others(const std::vector<QuadricHalfSpace>& hs, int self, const Curve& C, double t0, double t1) {
    for (double fr : {0.5, 0.25, 0.75, 0.125, 0.875}) {
        const auto x = C.at(t0 + fr * (t1 - t0));
        bool tie = false, out = false;
        for (int j = 0; j < static_cast<int>(hs.size()) && !out; ++j) {
            if (j == self) continue;
            const double q = qv(hs[static_cast<size_t>(j)], x);
            const double tol = 1e-10 * qscale(hs[static_cast<size_t>(j)], x);
            if (q > tol) out = true;
            else if (q >= -tol) tie = true;
        }
        if (out) return false;
        if (!tie) return true;
    }
    const auto x = C.at(0.5 * (t0 + t1));
    for (int j = 0; j < self; ++j)
        if (qv(hs[static_cast<size_t>(j)], x) >= -1e-10 * qscale(hs[static_cast<size_t>(j)], x)) return false;
    return true;
}

struct Piece {
    int curve;
    double t0, t1;  // oriented: interior on the left going from t0 to t1
    LorentzPlaneVector a, b;
};

}  // namespace

BoundaryPolygon polygon_from_halfspaces(const std::vector<QuadricHalfSpace>& hs) {
    std::vector<Curve> curves;
    for (size_t i = 0; i < hs.size(); ++i) {
        const auto& h = hs[i];
        if (h.dim() != 2) throw Error(ErrorKind::InvalidInput, "boundary half-spaces need two coordinates");
        if (metric_class(h) == MetricClass::Degenerate)
            throw Error(ErrorKind::Degenerate, "half-space " + std::to_string(i) + " has a degenerate trace");
        Curve c;
        c.facet = static_cast<int>(i);
        if (h.a != 0.0) {
            c.f = detail::ConicFrame::of(h);
            for (int s : {1, -1}) {
                c.sigma = s;
                curves.push_back(c);
            }
        } else {
            const double B1 = h.b[0], B2 = h.b[1];
            const double nn = B1 * B1 + B2 * B2;
            c.p0 = {-h.c * B1 / nn, h.c * B2 / nn};
            c.d = {B2, B1};
            curves.push_back(c);
        }
    }

    std::vector<Piece> pieces;
    double scale = 1.0;
    for (size_t ci = 0; ci < curves.size(); ++ci) {
        const Curve& C = curves[ci];
        std::vector<double> ts;
        for (size_t j = 0; j < hs.size(); ++j) {
            if (static_cast<int>(j) == C.facet) continue;
            for (double t : C.hits(hs[j])) ts.push_back(t);
        }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end(), [](double x, double y) { return std::abs(x - y) <= 1e-12 * (1 + std::abs(x)); }),
                 ts.end());
        const double lo = ts.empty() ? -1.0 : ts.front() - 1.0;
        const double hi = ts.empty() ? 1.0 : ts.back() + 1.0;
        if (inside_others(hs, C.facet, C, lo, ts.empty() ? hi : ts.front()) ||
            inside_others(hs, C.facet, C, ts.empty() ? lo : ts.back(), hi))
            throw Error(ErrorKind::InvalidInput, "region is unbounded");
        for (size_t k = 0; k + 1 < ts.size(); ++k) {
            if (!inside_others(hs, C.facet, C, ts[k], ts[k + 1])) continue;
            Piece p{static_cast<int>(ci), ts[k], ts[k + 1], {}, {}};
            const double tm = 0.5 * (ts[k] + ts[k + 1]);
            const auto x = C.at(tm);
            const auto T = C.tangent(tm);
            const auto& h = hs[static_cast<size_t>(C.facet)];
            const LorentzPlaneVector grad{2 * h.a * x.p + h.b[0], -2 * h.a * x.q - h.b[1]};
            if (-T.q * -grad.p + T.p * -grad.q < 0) std::swap(p.t0, p.t1);
            p.a = C.at(p.t0);
            p.b = C.at(p.t1);
            scale = std::max({scale, std::abs(p.a.p), std::abs(p.a.q)});
            pieces.push_back(p);
        }
    }
    if (pieces.empty()) throw Error(ErrorKind::InvalidInput, "region is empty");

    const double tol = 1e-7 * scale;
    std::vector<Piece> chain{pieces[0]};
    std::vector<bool> used(pieces.size(), false);
    used[0] = true;
    while (true) {
        const auto end = chain.back().b;
        if (chain.size() > 1 && std::hypot(end.p - chain.front().a.p, end.q - chain.front().a.q) <= tol) break;
        int best = -1;
        double bd = tol;
        for (size_t i = 0; i < pieces.size(); ++i) {
            if (used[i]) continue;
            const double d = std::hypot(pieces[i].a.p - end.p, pieces[i].a.q - end.q);
            if (d <= bd) {
                bd = d;
                best = static_cast<int>(i);
            }
        }
        if (best < 0) {
            if (chain.size() == 1 && std::hypot(end.p - chain.front().a.p, end.q - chain.front().a.q) <= tol) break;
            throw Error(ErrorKind::InvalidInput, "region boundary does not close");
        }
        used[static_cast<size_t>(best)] = true;
        chain.push_back(pieces[static_cast<size_t>(best)]);
    }
    if (std::find(used.begin(), used.end(), false) != used.end())
        throw Error(ErrorKind::InvalidInput, "region is not a single disk");

    // Merge neighbours on the same curve.
    std::vector<Piece> merged;
    for (const auto& p : chain) {
        if (!merged.empty() && merged.back().curve == p.curve) {
            merged.back().t1 = p.t1;
            merged.back().b = p.b;
        } else {
            merged.push_back(p);
        }
    }
    if (merged.size() > 1 && merged.front().curve == merged.back().curve) {
        merged.front().t0 = merged.back().t0;
        merged.front().a = merged.back().a;
        merged.pop_back();
    }

    BoundaryPolygon G;
    for (const auto& p : merged) {
        G.vertices.push_back(p.a);
        const auto& h = hs[static_cast<size_t>(curves[static_cast<size_t>(p.curve)].facet)];
        PolygonSide s;
        s.kind = h.a == 0.0 ? PolygonSide::Kind::Segment : PolygonSide::Kind::Conic;
        s.h = h;
        G.sides.push_back(s);
    }
    return G;
}

}  // namespace adsvol
