#include "adsvol/samples.hpp"

#include <cmath>
#include <algorithm>
#include <numbers>
#include <random>

namespace adsvol {

namespace {

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
    double sign() { return integer(0, 1) == 0 ? -1.0 : 1.0; }
};

QuadricHalfSpace line(double B1, double B2, double c) { return {0.0, MVector({B1, B2}, lorentz(1)), c}; }

QuadricHalfSpace conic_through(double a, double pc, double qc, double s) {
    return {a, MVector({-2 * a * pc, -2 * a * qc}, lorentz(1)), a * (pc * pc - qc * qc - s)};
}

}  // namespace

QuadricHalfSpace sphere_halfspace(double a, const MVector& v, double s) {
    return {a, (-2.0 * a) * v, a * (bilinear(v, v) - s)};
}

void add_slab(GoodPolytope& P, int k, double lo, double hi) {
    const Signature S = P.sig();
    MVector e = MVector::zero(S);
    e[k] = e.eta(k);  // b.x = x_k
    P.facets.push_back({0.0, -1.0 * e, lo});
    P.facets.push_back({0.0, e, -hi});
}

GoodPolytope cylinder(double t) {
    GoodPolytope P;
    P.ambient_dim = 3;
    const Signature S = lorentz(2);
    P.facets.push_back({1.0, MVector::zero(S), 1.0});
    P.facets.push_back({0.0, MVector({0, 0, 1}, S), 1.0});
    P.facets.push_back({0.0, MVector({0, 0, -1}, S), -t});
    const double r = std::sqrt(t * t - 1.0);
    P.upper = SheetExtent::bounded(Box{{-r, -r, 1.0}, {r, r, t}});
    P.lower = SheetExtent::empty();
    return P;
}

GoodPolytope cylinder4(double t) {
    GoodPolytope P;
    P.ambient_dim = 4;
    const Signature S = lorentz(3);
    P.facets.push_back({1.0, MVector::zero(S), 1.0});
    P.facets.push_back({0.0, MVector({0, 0, 0, 1}, S), 1.0});
    P.facets.push_back({0.0, MVector({0, 0, 0, -1}, S), -t});
    const double r = std::sqrt(t * t - 1.0);
    P.upper = SheetExtent::bounded(Box{{-r, -r, -r, 1.0}, {r, r, r, t}});
    P.lower = SheetExtent::empty();
    return P;
}

GoodPolytope lightcone_polytope(double t1) {
    GoodPolytope P;
    P.ambient_dim = 3;
    const Signature S = lorentz(2);
    P.facets.push_back({1.0, MVector::zero(S), 0.0});
    P.facets.push_back({0.0, MVector({0, 0, 1}, S), 0.0});
    P.facets.push_back({0.0, MVector({0, 0, -1}, S), -t1});
    P.upper = SheetExtent::bounded(Box{{-t1, -t1, 0.0}, {t1, t1, t1}});
    P.lower = SheetExtent::empty();
    return P;
}

GoodPolytope random_good_polytope(std::uint64_t seed, int d) {
    if (d != 2 && d != 3) throw Error(ErrorKind::InvalidInput, "random polytopes are generated in ambient 2 or 3");
    Rng rng(seed);
    const Signature S = lorentz(d - 1);
    const int n = d - 1;
    for (int attempt = 0; attempt < 200; ++attempt) {
        GoodPolytope P;
        P.ambient_dim = d;
        const double t0 = rng.uniform(-1.0, 1.0);
        add_slab(P, n, t0, t0 + rng.uniform(0.6, 1.6));
        if (d == 3) add_slab(P, 1, -rng.uniform(0.4, 1.5), rng.uniform(0.4, 1.5));
        auto center = [&] {
            MVector v = MVector::zero(S);
            if (d == 3) v[1] = rng.uniform(-0.6, 0.6);
            v[n] = t0 + rng.uniform(-1.0, 1.5);
            return v;
        };
        const double r0 = rng.uniform(0.6, 1.5);
        P.facets.push_back(sphere_halfspace(1.0, center(), r0 * r0));
        const int extra = rng.integer(0, d == 3 ? 2 : 1);
        for (int k = 0; k < extra; ++k) {
            const double r = rng.uniform(0.3, 1.2);
            P.facets.push_back(sphere_halfspace(rng.sign(), center(), rng.sign() * r * r));
        }
        try {
            validate_good_polytope(P);
            P.upper = scan_upper_extent(P);
            if (P.upper.state != SheetExtent::State::Bounded) continue;
            P.lower = lower_sheet_provably_empty(P) ? SheetExtent::empty() : SheetExtent::unknown();
            if (P.lower.state != SheetExtent::State::Empty) continue;
            verify_upper_box(P);
            const auto V = volume(P);
            if (std::abs(V.value) < 0.05) continue;
        } catch (const Error&) {
            continue;
        }
        return P;
    }
    throw Error(ErrorKind::InvalidInput, "could not draw a random polytope");
}

BoundaryPolygon random_straight_polygon(std::uint64_t seed, int k) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<double> ang;
        for (int i = 0; i < k; ++i) ang.push_back(rng.uniform(0.0, 2 * std::numbers::pi));
        std::sort(ang.begin(), ang.end());
        const double cp = rng.uniform(2.5, 3.5), cq = rng.uniform(-0.3, 0.3), r = rng.uniform(0.4, 1.0);
        BoundaryPolygon G;
        for (double a : ang) G.vertices.push_back({cp + r * std::cos(a), cq + r * std::sin(a)});
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            const auto& A = G.vertices[static_cast<size_t>(i)];
            const auto& B = G.vertices[static_cast<size_t>((i + 1) % k)];
            const double dp = std::abs(B.p - A.p), dq = std::abs(B.q - A.q);
            ok = std::abs(dp - dq) > 0.05 * (dp + dq) && dp + dq > 0.05;
        }
        if (!ok) continue;
        G.sides.assign(static_cast<size_t>(k), PolygonSide{});
        try {
            return prepared(G);
        } catch (const Error&) {
        }
    }
    throw Error(ErrorKind::InvalidInput, "could not draw a random polygon");
}

BoundaryPolygon random_conic_polygon(std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const double p0 = rng.uniform(2.0, 2.5), p1 = p0 + rng.uniform(0.6, 1.2);
        const double q0 = rng.uniform(-0.6, -0.2), q1 = rng.uniform(0.2, 0.6);
        std::vector<QuadricHalfSpace> hs{line(-1, 0, p0), line(1, 0, -p1), line(0, 1, q0), line(0, -1, -q1)};
        const int m = rng.integer(1, 2);
        for (int k = 0; k < m; ++k) {
            const double xp = rng.uniform(p0 + 0.2 * (p1 - p0), p1 - 0.2 * (p1 - p0));
            const double xq = rng.uniform(0.8 * q0, 0.8 * q1);
            const double pc = xp + rng.uniform(-2.0, 2.0), qc = xq + rng.uniform(-2.0, 2.0);
            const double s = (xp - pc) * (xp - pc) - (xq - qc) * (xq - qc);
            if (std::abs(s) < 0.1) continue;
            hs.push_back(conic_through(rng.sign(), pc, qc, s));
        }
        try {
            BoundaryPolygon G = polygon_from_halfspaces(hs);
            bool conic = false;
            for (const auto& s : G.sides) conic = conic || s.kind == PolygonSide::Kind::Conic;
            if (!conic) continue;
            G = prepared(G);
            polygon_volume(G);
            return G;
        } catch (const Error&) {
        }
    }
    throw Error(ErrorKind::InvalidInput, "could not draw a random conic polygon");
}

IsometryWord random_boundary_word(std::uint64_t seed) {
    Rng rng(seed);
    IsometryWord w;
    w.moves.push_back(InversionJ{});
    const int extra = rng.integer(1, 3);
    for (int k = 0; k < extra; ++k) {
        switch (rng.integer(0, 2)) {
            case 0: w.moves.push_back(Translation{MVector({0.0, rng.uniform(-1, 1), rng.uniform(-1, 1)}, lorentz(2))}); break;
            case 1: w.moves.push_back(boost(2, 1, rng.uniform(-0.8, 0.8))); break;
            default: w.moves.push_back(Similarity{rng.uniform(0.5, 2.0)}); break;
        }
    }
    return w;
}

}  // namespace adsvol
