#include "adsvol/isometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace adsvol {

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit(rng); }

int sgn(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

std::vector<double> apply_matrix(const LinearFix0& L, const std::vector<double>& x1n) {
    std::vector<double> out(static_cast<size_t>(L.n), 0.0);
    for (int i = 0; i < L.n; ++i)
        for (int j = 0; j < L.n; ++j)
            out[static_cast<size_t>(i)] += L.m[static_cast<size_t>(i * L.n + j)] * x1n[static_cast<size_t>(j)];
    return out;
}

MVector apply_linear(const LinearFix0& L, const MVector& x) {
    if (x.dim() != L.n + 1) throw Error(ErrorKind::SignatureMismatch, "linear map dimension mismatch");
    std::vector<double> tail(x.coords.begin() + 1, x.coords.end());
    auto mapped = apply_matrix(L, tail);
    MVector r = x;
    for (int i = 0; i < L.n; ++i) r[i + 1] = mapped[static_cast<size_t>(i)];
    return r;
}

double inversion_denominator(const MVector& x) {
    const double xx = bilinear(x, x);
    if (std::abs(xx) <= tol_null(x))
        throw Error(ErrorKind::BoundaryPoint, "inversion of a null or zero vector lands at infinity");
    return xx;
}

struct Interval {
    double lo, hi;
};

Interval square(Interval v) {
    if (v.lo <= 0.0 && v.hi >= 0.0) return {0.0, std::max(v.lo * v.lo, v.hi * v.hi)};
    const double a = v.lo * v.lo, b = v.hi * v.hi;
    return {std::min(a, b), std::max(a, b)};
}

Interval times(Interval u, Interval v) {
    const double c[4] = {u.lo * v.lo, u.lo * v.hi, u.hi * v.lo, u.hi * v.hi};
    return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

}  // namespace

LinearFix0 boost(int n, int axis, double eta) {
    LinearFix0 L;
    L.n = n;
    L.m.assign(static_cast<size_t>(n * n), 0.0);
    for (int i = 0; i < n; ++i) L.m[static_cast<size_t>(i * n + i)] = 1.0;
    if (n >= 2 && axis >= 1 && axis < n) {
        const int i = axis - 1, k = n - 1;
        L.m[static_cast<size_t>(i * n + i)] = std::cosh(eta);
        L.m[static_cast<size_t>(k * n + k)] = std::cosh(eta);
        L.m[static_cast<size_t>(i * n + k)] = std::sinh(eta);
        L.m[static_cast<size_t>(k * n + i)] = std::sinh(eta);
    }
    return L;
}

void check_primitive(const PrimitiveIsometry& g, int ambient_dim) {
    const int n = ambient_dim - 1;
    if (const auto* L = std::get_if<LinearFix0>(&g)) {
        if (L->n != n || static_cast<int>(L->m.size()) != n * n)
            throw Error(ErrorKind::InvalidInput, "linear move has the wrong size");
        // M^T J M = J with J = diag(1,..,1,-1) on (x1..xn)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int k = 0; k < n; ++k) {
                    const double eta = (k == n - 1) ? -1.0 : 1.0;
                    s += L->m[static_cast<size_t>(k * n + i)] * eta * L->m[static_cast<size_t>(k * n + j)];
                }
                const double want = (i == j) ? ((i == n - 1) ? -1.0 : 1.0) : 0.0;
                if (std::abs(s - want) > 1e-10 * std::max(1.0, std::abs(s)))
                    throw Error(ErrorKind::InvalidInput, "linear move does not preserve the form");
            }
    } else if (const auto* T = std::get_if<Translation>(&g)) {
        if (T->w.dim() != ambient_dim) throw Error(ErrorKind::InvalidInput, "translation has the wrong size");
        if (T->w[0] != 0.0) throw Error(ErrorKind::InvalidInput, "translation must have zero x0 component");
    } else if (const auto* S = std::get_if<Similarity>(&g)) {
        if (S->lambda == 0.0 || !std::isfinite(S->lambda))
            throw Error(ErrorKind::InvalidInput, "similarity factor must be nonzero");
    }
}

SignedPoint apply_point(const PrimitiveIsometry& g, const SignedPoint& p) {
    return std::visit(
        [&](const auto& m) -> SignedPoint {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, LinearFix0>) {
                return {apply_linear(m, p.x), p.h};
            } else if constexpr (std::is_same_v<T, Translation>) {
                return {p.x + m.w, p.h};
            } else if constexpr (std::is_same_v<T, Similarity>) {
                return {m.lambda * p.x, p.h * sgn(m.lambda)};
            } else if constexpr (std::is_same_v<T, InversionJ>) {
                const double xx = inversion_denominator(p.x);
                return {(1.0 / xx) * p.x, sgn(xx) * p.h};
            } else {
                const double xx = inversion_denominator(p.x);
                return {(-1.0 / xx) * p.x, -sgn(xx) * p.h};
            }
        },
        g);
}

SignedPoint apply_point(const IsometryWord& g, const SignedPoint& p) {
    SignedPoint q = p;
    for (const auto& m : g.moves) q = apply_point(m, q);
    return q;
}

std::optional<SignedPoint> try_apply_point(const IsometryWord& g, const SignedPoint& p) {
    try {
        return apply_point(g, p);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::BoundaryPoint) return std::nullopt;
        throw;
    }
}

QuadricHalfSpace apply_halfspace(const PrimitiveIsometry& g, const QuadricHalfSpace& H) {
    return std::visit(
        [&](const auto& m) -> QuadricHalfSpace {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, LinearFix0>) {
                return {H.a, apply_linear(m, H.b), H.c};
            } else if constexpr (std::is_same_v<T, Translation>) {
                return {H.a, H.b - (2.0 * H.a) * m.w, H.c - bilinear(H.b, m.w) + H.a * bilinear(m.w, m.w)};
            } else if constexpr (std::is_same_v<T, Similarity>) {
                const double s = m.lambda > 0.0 ? 1.0 : -1.0;
                return {s * H.a, (s * m.lambda) * H.b, s * m.lambda * m.lambda * H.c};
            } else if constexpr (std::is_same_v<T, InversionJ>) {
                return {H.c, H.b, H.a};
            } else {
                return {-H.c, H.b, -H.a};
            }
        },
        g);
}

QuadricHalfSpace apply_halfspace(const IsometryWord& g, const QuadricHalfSpace& H) {
    QuadricHalfSpace r = H;
    for (const auto& m : g.moves) r = apply_halfspace(m, r);
    return r;
}

PrimitiveIsometry invert(const PrimitiveIsometry& g) {
    return std::visit(
        [](const auto& m) -> PrimitiveIsometry {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, LinearFix0>) {
                // M^{-1} = J M^T J
                LinearFix0 inv{m.n, std::vector<double>(m.m.size())};
                for (int i = 0; i < m.n; ++i)
                    for (int j = 0; j < m.n; ++j) {
                        const double ei = (i == m.n - 1) ? -1.0 : 1.0;
                        const double ej = (j == m.n - 1) ? -1.0 : 1.0;
                        inv.m[static_cast<size_t>(i * m.n + j)] = ei * m.m[static_cast<size_t>(j * m.n + i)] * ej;
                    }
                return inv;
            } else if constexpr (std::is_same_v<T, Translation>) {
                return Translation{-m.w};
            } else if constexpr (std::is_same_v<T, Similarity>) {
                return Similarity{1.0 / m.lambda};
            } else {
                return m;
            }
        },
        g);
}

IsometryWord invert_word(const IsometryWord& g) {
    IsometryWord r;
    for (auto it = g.moves.rbegin(); it != g.moves.rend(); ++it) r.moves.push_back(invert(*it));
    return r;
}

IsometryWord compose(const IsometryWord& g1, const IsometryWord& g2) {
    IsometryWord r = g1;
    r.moves.insert(r.moves.end(), g2.moves.begin(), g2.moves.end());
    return r;
}

unsigned class_of(const PrimitiveIsometry& g) {
    switch (g.index()) {
        case 0: return kLinear;
        case 1: return kTranslation;
        case 2: return kSimilarity;
        case 3: return kInversionJ;
        default: return kInversionJminus;
    }
}

const char* type_name(const PrimitiveIsometry& g) {
    switch (g.index()) {
        case 0: return "linear";
        case 1: return "translation";
        case 2: return "similarity";
        case 3: return "inversion_j";
        default: return "inversion_jminus";
    }
}

int inversion_count(const IsometryWord& g) {
    int k = 0;
    for (const auto& m : g.moves)
        if (class_of(m) & (kInversionJ | kInversionJminus)) ++k;
    return k;
}

namespace {

PrimitiveIsometry random_move(std::mt19937_64& rng, unsigned cls, int ambient_dim) {
    const int n = ambient_dim - 1;
    switch (cls) {
        case kLinear: {
            LinearFix0 L = boost(n, n >= 2 ? 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1)) : 0,
                                 uniform(rng, -0.6, 0.6));
            for (int k = 0; k < n; ++k)
                if (unit(rng) < 0.25)
                    for (int j = 0; j < n; ++j) L.m[static_cast<size_t>(k * n + j)] *= -1.0;
            return L;
        }
        case kTranslation: {
            MVector w = MVector::zero(lorentz(n));
            for (int i = 1; i <= n; ++i) w[i] = uniform(rng, -1.0, 1.0);
            return Translation{w};
        }
        case kSimilarity: {
            double lambda = uniform(rng, 0.5, 2.0);
            if (unit(rng) < 0.3) lambda = -lambda;
            return Similarity{lambda};
        }
        case kInversionJ: return InversionJ{};
        default: return InversionJminus{};
    }
}

}  // namespace

IsometryWord random_isometry(std::uint64_t seed, unsigned mask, int ambient_dim, int max_len) {
    std::mt19937_64 rng(seed);
    std::vector<unsigned> classes;
    for (unsigned c : {kLinear, kTranslation, kSimilarity, kInversionJ, kInversionJminus})
        if (mask & c) classes.push_back(c);
    IsometryWord w;
    if (classes.empty() || max_len < 1) return w;
    const int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_len));
    int inversions = 0;
    for (int i = 0; i < len; ++i) {
        unsigned cls = classes[rng() % classes.size()];
        if ((cls & (kInversionJ | kInversionJminus)) && inversions >= 2) {
            std::vector<unsigned> rest;
            for (unsigned c : classes)
                if (!(c & (kInversionJ | kInversionJminus))) rest.push_back(c);
            if (rest.empty()) break;
            cls = rest[rng() % rest.size()];
        }
        if (cls & (kInversionJ | kInversionJminus)) ++inversions;
        w.moves.push_back(random_move(rng, cls, ambient_dim));
    }
    return w;
}

std::optional<SheetBox> transport_box(const PrimitiveIsometry& g, const SheetBox& sb) {
    const Box& b = sb.box;
    const int d = b.dim();
    SheetBox out = sb;
    if (const auto* L = std::get_if<LinearFix0>(&g)) {
        for (int i = 0; i < L->n; ++i) {
            Interval acc{0.0, 0.0};
            for (int j = 0; j < L->n; ++j) {
                const double m = L->m[static_cast<size_t>(i * L->n + j)];
                const Interval t = times({m, m}, {b.lo[static_cast<size_t>(j + 1)], b.hi[static_cast<size_t>(j + 1)]});
                acc.lo += t.lo;
                acc.hi += t.hi;
            }
            out.box.lo[static_cast<size_t>(i + 1)] = acc.lo;
            out.box.hi[static_cast<size_t>(i + 1)] = acc.hi;
        }
        return out;
    }
    if (const auto* T = std::get_if<Translation>(&g)) {
        for (int i = 0; i < d; ++i) {
            out.box.lo[static_cast<size_t>(i)] += T->w[i];
            out.box.hi[static_cast<size_t>(i)] += T->w[i];
        }
        return out;
    }
    if (const auto* S = std::get_if<Similarity>(&g)) {
        for (int i = 0; i < d; ++i) {
            const double a = S->lambda * b.lo[static_cast<size_t>(i)], c = S->lambda * b.hi[static_cast<size_t>(i)];
            out.box.lo[static_cast<size_t>(i)] = std::min(a, c);
            out.box.hi[static_cast<size_t>(i)] = std::max(a, c);
        }
        if (S->lambda < 0.0) out.h = -sb.h;
        return out;
    }
    // inversions
    Interval xx{0.0, 0.0};
    for (int i = 0; i < d; ++i) {
        const Interval s = square({b.lo[static_cast<size_t>(i)], b.hi[static_cast<size_t>(i)]});
        if (i < d - 1) {
            xx.lo += s.lo;
            xx.hi += s.hi;
        } else {
            xx.lo -= s.hi;
            xx.hi -= s.lo;
        }
    }
    const double scale = 1e-9 * std::max(1.0, std::max(std::abs(xx.lo), std::abs(xx.hi)));
    if (xx.lo <= scale && xx.hi >= -scale) return std::nullopt;
    const Interval inv{1.0 / xx.hi, 1.0 / xx.lo};
    const double sign = std::holds_alternative<InversionJ>(g) ? 1.0 : -1.0;
    for (int i = 0; i < d; ++i) {
        Interval y = times({b.lo[static_cast<size_t>(i)], b.hi[static_cast<size_t>(i)]}, inv);
        if (sign < 0.0) y = {-y.hi, -y.lo};
        out.box.lo[static_cast<size_t>(i)] = y.lo;
        out.box.hi[static_cast<size_t>(i)] = y.hi;
    }
    const int s = xx.lo > 0.0 ? 1 : -1;
    out.h = static_cast<int>(sign) * s * sb.h;
    return out;
}

GoodPolytope transport_polytope(const IsometryWord& g, const GoodPolytope& P) {
    GoodPolytope out;
    out.ambient_dim = P.ambient_dim;
    for (const auto& H : P.facets) out.facets.push_back(apply_halfspace(g, H));

    using S = SheetExtent::State;
    if (P.upper.state == S::Unknown || P.lower.state == S::Unknown) {
        out.upper = SheetExtent::unknown();
        out.lower = SheetExtent::unknown();
        return out;
    }
    std::vector<SheetBox> boxes;
    if (P.upper.state == S::Bounded) boxes.push_back({P.upper.box, 1});
    if (P.lower.state == S::Bounded) boxes.push_back({P.lower.box, -1});
    for (const auto& m : g.moves) {
        for (auto& b : boxes) {
            auto img = transport_box(m, b);
            if (!img) {
                out.upper = SheetExtent::unknown();
                out.lower = SheetExtent::unknown();
                return out;
            }
            b = *img;
        }
    }
    out.upper = SheetExtent::empty();
    out.lower = SheetExtent::empty();
    for (const auto& b : boxes) {
        SheetExtent& e = b.h > 0 ? out.upper : out.lower;
        if (e.state == S::Empty)
            e = SheetExtent::bounded(b.box);
        else
            e.box = e.box.hull(b.box);
    }
    return out;
}

bool extents_known(const GoodPolytope& P) {
    return P.upper.state != SheetExtent::State::Unknown && P.lower.state != SheetExtent::State::Unknown;
}

IsometryWord random_bounded_word(std::uint64_t seed, const GoodPolytope& P, int max_inversions) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const int d = P.ambient_dim;
    const int n = d - 1;
    IsometryWord word;
    GoodPolytope cur = P;
    const int inversions = static_cast<int>(rng() % static_cast<unsigned>(max_inversions + 1));
    const int plain_moves = 1 + static_cast<int>(rng() % 2u);
    std::vector<int> plan(static_cast<size_t>(plain_moves), 0);
    for (int i = 0; i < inversions; ++i) plan.push_back(1);
    std::shuffle(plan.begin(), plan.end(), rng);

    auto push = [&](const PrimitiveIsometry& m) {
        word.moves.push_back(m);
        cur = transport_polytope(IsometryWord{{m}}, cur);
    };

    for (int step : plan) {
        if (!extents_known(cur)) break;
        if (step == 0) {
            const unsigned cls[3] = {kLinear, kTranslation, kSimilarity};
            push(random_move(rng, cls[rng() % 3u], d));
            continue;
        }
        Box hull;
        bool have = false;
        for (const SheetExtent* e : {&cur.upper, &cur.lower})
            if (e->state == SheetExtent::State::Bounded) {
                hull = have ? hull.hull(e->box) : e->box;
                have = true;
            }
        if (!have) break;
        double diam = 0.0;
        for (int i = 0; i < d; ++i) diam = std::max(diam, hull.hi[static_cast<size_t>(i)] - hull.lo[static_cast<size_t>(i)]);
        const bool timelike = (n < 2) ? true : (unit(rng) < 0.6);
        MVector w = MVector::zero(lorentz(n));
        const double sign = unit(rng) < 0.5 ? -1.0 : 1.0;
        const double margin = diam + 1.0 + uniform(rng, 0.0, 1.0);
        if (timelike) {
            // push x_n away so that x_n^2 exceeds the spacelike part on the whole box
            double space = 0.0;
            for (int i = 0; i < n; ++i) {
                const double m = std::max(std::abs(hull.lo[static_cast<size_t>(i)]), std::abs(hull.hi[static_cast<size_t>(i)]));
                space += m * m;
            }
            const double target = 1.5 * std::sqrt(space) + margin;
            const double edge = sign > 0 ? hull.lo[static_cast<size_t>(n)] : -hull.hi[static_cast<size_t>(n)];
            w[n] = sign * std::max(0.0, target - edge);
        } else {
            const double tmax = std::max(std::abs(hull.lo[static_cast<size_t>(n)]), std::abs(hull.hi[static_cast<size_t>(n)]));
            const double target = 1.5 * tmax + margin;
            const double edge = sign > 0 ? hull.lo[1] : -hull.hi[1];
            w[1] = sign * std::max(0.0, target - edge);
        }
        push(Translation{w});
        if (unit(rng) < 0.5)
            push(InversionJ{});
        else
            push(InversionJminus{});
    }
    return word;
}

}  // namespace adsvol
