#include <algorithm>
#include <cmath>
#include <functional>

#include "adsvol/volume.hpp"
#include "quadrature.hpp"
#include "slice_geometry.hpp"

namespace adsvol {

namespace {


struct FiberCoef {
    double a, b0, K;
};

// Integral over x0 in [lo, hi] of (x0 - eps i)^{-d} restricted to the polytope fiber at fixed (x1..xn).
Complex fiber(const std::vector<QuadricHalfSpace>& F, const std::vector<double>& rest, double lo, double hi,
              double eps, int d) {
    thread_local std::vector<FiberCoef> coef;
    thread_local std::vector<double> cuts;
    coef.clear();
    cuts.clear();
    cuts.push_back(lo);
    cuts.push_back(hi);
    for (const auto& H : F) {
        double K = H.c;
        for (int i = 1; i < d; ++i) {
            const double x = rest[static_cast<size_t>(i - 1)];
            const double eta = H.b.eta(i);
            K += eta * (H.a * x * x + H.b[i] * x);
        }
        const double b0 = H.b[0];
        coef.push_back({H.a, b0, K});
        if (H.a != 0.0) {
            const double disc = b0 * b0 - 4 * H.a * K;
            if (disc > 0.0) {
                const double sq = std::sqrt(disc);
                const double q = -0.5 * (b0 + std::copysign(sq, b0));
                if (q != 0.0) {
                    cuts.push_back(q / H.a);
                    cuts.push_back(K / q);
                } else {
                    cuts.push_back(sq / (2 * H.a));
                    cuts.push_back(-sq / (2 * H.a));
                }
            }
        } else if (b0 != 0.0) {
            cuts.push_back(-K / b0);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    const auto Fx = [&](double x) {
        const Complex z(x, -eps);
        return -1.0 / (static_cast<double>(d - 1) * std::pow(z, d - 1));
    };
    Complex sum{0.0, 0.0};
    bool open = false;
    double start = 0.0, end = 0.0;
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double a = std::max(cuts[k], lo), b = std::min(cuts[k + 1], hi);
        if (!(b > a)) continue;
        const double m = 0.5 * (a + b);
        bool in = true;
        for (const auto& c : coef)
            if (c.a * m * m + c.b0 * m + c.K > 0.0) {
                in = false;
                break;
            }
        if (in) {
            if (!open) start = a;
            open = true;
            end = b;
        } else if (open) {
            sum += Fx(end) - Fx(start);
            open = false;
        }
    }
    if (open) sum += Fx(end) - Fx(start);
    return sum;
}

unsigned depth_for(long budget) {
    const double l = std::log2(static_cast<double>(std::max(64L, budget)));
    return static_cast<unsigned>(std::clamp(l / 2.0, 5.0, 24.0));
}

// Integrates f over [lo, hi] split at cuts. Every piece is halved and each half is mapped
// by x = end -+ u^2 so square-root behaviour at the cuts is smoothed out.
OracleValue integrate_split(const std::function<Complex(double)>& f, std::vector<double> cuts, double lo, double hi,
                            unsigned depth, double tol) {
    cuts.push_back(lo);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    OracleValue out;
    auto add = [&](double end, double len, double dir) {
        const auto g = [&](double u) { return 2.0 * u * f(end + dir * u * u); };
        const auto r = detail::adaptive_gk(g, 0.0, std::sqrt(len), tol, 1 << depth);
        out.value += r.value;
        out.abs_err += r.abs_err;
    };
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double a = std::max(cuts[k], lo), b = std::min(cuts[k + 1], hi);
        if (!(b - a > 1e-14 * (hi - lo))) continue;
        const double m = 0.5 * (a + b);
        add(a, m - a, 1.0);
        add(b, b - m, -1.0);
    }
    return out;
}

// x1 positions where the fiber structure changes at x2 = t (ambient 3).
std::vector<double> inner_cuts(const std::vector<QuadricHalfSpace>& F, double t) {
    const auto s = detail::make_slice(F, 3, t);
    std::vector<double> cuts;
    for (size_t i = 0; i < s.elems.size(); ++i) {
        const auto& e = s.elems[i];
        if (e.kind == detail::SliceElem::Kind::Line) cuts.push_back(e.L);
        if (e.kind != detail::SliceElem::Kind::Circle || e.rho <= 0.0) continue;
        const double R = std::sqrt(e.rho);
        cuts.push_back(e.v1 - R);
        cuts.push_back(e.v1 + R);
        for (size_t j = i + 1; j < s.elems.size(); ++j) {
            const auto& f = s.elems[j];
            if (f.kind != detail::SliceElem::Kind::Circle || f.rho <= 0.0) continue;
            const double dv = f.v1 - e.v1;
            if (dv != 0.0) cuts.push_back(0.5 * (e.v1 + f.v1) + (e.rho - f.rho) / (2 * dv));
        }
    }
    return cuts;
}

OracleValue mu_eps_23(const GoodPolytope& P, double eps, const OracleOptions& opt) {
    const Box& B = P.upper.box;
    const int d = P.ambient_dim;
    const unsigned depth = depth_for(opt.budget);
    const double tol = std::max(opt.rel_tol, 1e-14);
    const size_t n = static_cast<size_t>(d - 1);
    std::vector<double> tcuts;
    for (const auto& e : detail::analytic_events(P.facets, d)) tcuts.push_back(e.t);
    if (d == 2) {
        std::vector<double> rest(1);
        return integrate_split(
            [&](double t) {
                rest[0] = t;
                return fiber(P.facets, rest, B.lo[0], B.hi[0], eps, 2);
            },
            tcuts, B.lo[n], B.hi[n], depth, tol);
    }
    double inner_err = 0.0;
    auto outer = [&](double t) {
        std::vector<double> rest(2);
        rest[1] = t;
        const auto v = integrate_split(
            [&](double x1) {
                rest[0] = x1;
                return fiber(P.facets, rest, B.lo[0], B.hi[0], eps, 3);
            },
            inner_cuts(P.facets, t), B.lo[1], B.hi[1], depth, tol);
        inner_err = std::max(inner_err, v.abs_err);
        return v.value;
    };
    auto v = integrate_split(outer, tcuts, B.lo[n], B.hi[n], depth, tol);
    v.abs_err += inner_err * (B.hi[n] - B.lo[n]);
    return v;
}

// Cuts in x_k (x_{k+1..n} fixed, x_0..x_{k-1} integrated out) where a quadric facet's section
// degenerates, with and without the x0 = 0 constraint.
std::vector<double> level_cuts(const std::vector<QuadricHalfSpace>& F, const std::vector<double>& rest, size_t k, int d) {
    std::vector<double> cuts;
    for (const auto& H : F) {
        if (H.a == 0.0) {
            if (k == 1 && H.b[0] == 0.0 && H.b[1] != 0.0) {
                double K = H.c;
                for (int i = 2; i < d; ++i) K += H.b.eta(i) * H.b[i] * rest[static_cast<size_t>(i - 1)];
                cuts.push_back(-K / (H.b.eta(1) * H.b[1]));
            }
            continue;
        }
        // q/a = sum eta_i (x_i - m_i)^2 - R
        double R = -H.c / H.a;
        for (int i = 0; i < d; ++i) {
            const double m = -H.b[i] / (2 * H.a);
            R += H.b.eta(i) * m * m;
        }
        double S = R;
        for (int i = static_cast<int>(k) + 1; i < d; ++i) {
            const double x = rest[static_cast<size_t>(i - 1)] + H.b[i] / (2 * H.a);
            S -= H.b.eta(i) * x * x;
        }
        const double mk = -H.b[k] / (2 * H.a), m0 = -H.b[0] / (2 * H.a);
        const double eta = H.b.eta(static_cast<int>(k));
        for (double v : {eta * S, eta * (S - m0 * m0)}) {
            if (v <= 0.0) continue;
            cuts.push_back(mk - std::sqrt(v));
            cuts.push_back(mk + std::sqrt(v));
        }
    }
    return cuts;
}

// Nested adaptive quadrature over x_1..x_n with the x0 fiber done in closed form.
OracleValue mu_eps_nested(const GoodPolytope& P, double eps, const OracleOptions& opt) {
    const Box& B = P.upper.box;
    const int d = P.ambient_dim;
    const size_t n = static_cast<size_t>(d - 1);
    const double l = std::log2(static_cast<double>(std::max(64L, opt.budget))) / static_cast<double>(n);
    const unsigned depth = static_cast<unsigned>(std::clamp(l, 4.0, 16.0));
    const double tol = std::max(opt.rel_tol, 1e-8);
    std::vector<double> rest(n);
    std::vector<double> level_err(n + 1, 0.0);
    std::function<Complex(size_t)> level = [&](size_t k) -> Complex {
        if (k == 0) return fiber(P.facets, rest, B.lo[0], B.hi[0], eps, d);
        const auto v = integrate_split(
            [&](double x) {
                rest[k - 1] = x;
                return level(k - 1);
            },
            level_cuts(P.facets, rest, k, d), B.lo[k], B.hi[k], depth, tol);
        level_err[k] = std::max(level_err[k], v.abs_err);
        return v.value;
    };
    OracleValue out{level(n), level_err[n]};
    double width = 1.0;
    for (size_t k = n; k-- > 1;) {
        width *= B.hi[k + 1] - B.lo[k + 1];
        out.abs_err += level_err[k] * width;
    }
    return out;
}

GoodPolytope with_upper_extent(GoodPolytope P) {
    if (P.upper.state == SheetExtent::State::Unknown) {
        P.upper = scan_upper_extent(P);
        if (P.upper.state == SheetExtent::State::Unknown)
            throw Error(ErrorKind::DecompositionRequired, "cannot bound the polytope for the eps oracle");
    }
    return P;
}

GoodPolytope lower_as_upper(const GoodPolytope& P) {
    GoodPolytope L = map_lower_sheet(P);
    if (P.lower.state == SheetExtent::State::Unknown && lower_sheet_provably_empty(P)) L.upper = SheetExtent::empty();
    return L;
}

}  // namespace

OracleValue mu_eps(const GoodPolytope& P, double eps, const OracleOptions& opt) {
    if (!(eps > 0.0)) throw Error(ErrorKind::Config, "eps must be positive");
    const GoodPolytope Q = with_upper_extent(P);
    if (Q.upper.state == SheetExtent::State::Empty) return {};
    if (Q.ambient_dim <= 3) return mu_eps_23(Q, eps, opt);
    return mu_eps_nested(Q, eps, opt);
}

OracleValue epsilon_oracle(const GoodPolytope& P, double eps, const OracleOptions& opt) {
    const auto u = mu_eps(P, eps, opt);
    const auto l = mu_eps(lower_as_upper(P), eps, opt);
    return {u.value + l.value, u.abs_err + l.abs_err};
}

double default_eps0(const GoodPolytope& P) {
    double hw = 0.0;
    for (const SheetExtent* e : {&P.upper, &P.lower}) {
        if (e->state == SheetExtent::State::Bounded) hw = std::max(hw, 0.5 * (e->box.hi[0] - e->box.lo[0]));
    }
    if (hw == 0.0) {
        const auto s = with_upper_extent(P).upper;
        if (s.state == SheetExtent::State::Bounded) hw = 0.5 * (s.box.hi[0] - s.box.lo[0]);
    }
    return hw > 0.0 ? 0.1 * hw : 0.1;
}

ExtrapolationResult epsilon_extrapolate(const GoodPolytope& P, EpsilonSchedule sched, const OracleOptions& opt) {
    if (sched.eps0 == 0.0) sched.eps0 = default_eps0(P);
    sched.validate();
    OracleOptions o = opt;
    o.budget = sched.budget;
    const GoodPolytope up = with_upper_extent(P);
    const GoodPolytope lo = with_upper_extent(lower_as_upper(P));

    ExtrapolationResult r;
    const int K = sched.count;
    double qerr = 0.0;
    for (int k = 0; k < K; ++k) {
        const double eps = sched.eps0 * std::pow(sched.ratio, k);
        const auto a = mu_eps(up, eps, o);
        const auto b = mu_eps(lo, eps, o);
        r.eps.push_back(eps);
        r.values.push_back(a.value + b.value);
        r.quad_err.push_back(a.abs_err + b.abs_err);
        qerr = std::max(qerr, a.abs_err + b.abs_err);
    }

    const int deg = std::min(3, K - 1);
    // Neville table extrapolated to eps = 0.
    std::vector<std::vector<Complex>> T(static_cast<size_t>(K), std::vector<Complex>(static_cast<size_t>(deg) + 1));
    for (int k = 0; k < K; ++k) {
        T[static_cast<size_t>(k)][0] = r.values[static_cast<size_t>(k)];
        for (int j = 1; j <= std::min(k, deg); ++j) {
            const double ek = r.eps[static_cast<size_t>(k)], ekj = r.eps[static_cast<size_t>(k - j)];
            T[static_cast<size_t>(k)][static_cast<size_t>(j)] =
                (ekj * T[static_cast<size_t>(k)][static_cast<size_t>(j - 1)] -
                 ek * T[static_cast<size_t>(k - 1)][static_cast<size_t>(j - 1)]) /
                (ekj - ek);
        }
    }
    const auto& last = T[static_cast<size_t>(K - 1)];
    const Complex best = last[static_cast<size_t>(deg)];
    r.residual = deg >= 1 ? std::abs(best - last[static_cast<size_t>(deg - 1)]) : 0.0;
    r.drift = K - 2 >= deg ? std::abs(best - T[static_cast<size_t>(K - 2)][static_cast<size_t>(deg)]) : 0.0;

    double lebesgue = 0.0;
    for (int k = K - 1 - deg; k < K; ++k) {
        double w = 1.0;
        for (int j = K - 1 - deg; j < K; ++j)
            if (j != k) w *= r.eps[static_cast<size_t>(j)] / (r.eps[static_cast<size_t>(j)] - r.eps[static_cast<size_t>(k)]);
        lebesgue += std::abs(w);
    }

    const Complex d1 = r.values[static_cast<size_t>(K - 1)] - r.values[static_cast<size_t>(K - 2)];
    const Complex d0 = r.values[static_cast<size_t>(K - 2)] - r.values[static_cast<size_t>(K - 3)];
    r.contraction = std::abs(d0) > 0.0 ? std::abs(d1) / std::abs(d0) : 0.0;
    const double scale = 1.0 + std::abs(best);
    const bool moving = std::abs(d1) > 1e-7 * scale + 4 * lebesgue * qerr;
    r.converged = std::isfinite(best.real()) && std::isfinite(best.imag()) &&
                  !(moving && r.contraction > 0.5 * (1.0 + sched.ratio));

    r.volume.value = best;
    r.volume.abs_err = std::max(r.residual, r.drift) + lebesgue * qerr;
    return r;
}

}  // namespace adsvol
