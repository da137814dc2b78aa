#include <cmath>
#include <functional>

#include "adsvol/volume.hpp"
#include "quadrature.hpp"

namespace adsvol {

namespace {

ComplexVolume integrate(const std::function<Complex(double)>& f, double a, double b, const VolumeOptions& opt) {
    const int panels = 1 << std::clamp(opt.max_depth, 1, 20);
    const auto r = detail::adaptive_gk(f, a, b, opt.rel_tol, std::min(panels, 1 << 14));
    return {r.value, r.abs_err};
}

ComplexVolume integrate_interval(const GoodPolytope& P, const SliceInterval& I, const VolumeOptions& opt) {
    const auto b = [&](double t) { return integrand_b(P, t); };
    if (I.singular_a && I.singular_b) {
        const double m = 0.5 * (I.a + I.b);
        const auto l = integrate_interval(P, {I.a, m, true, false}, opt);
        const auto r = integrate_interval(P, {m, I.b, false, true}, opt);
        return {l.value + r.value, l.abs_err + r.abs_err};
    }
    const double len = I.b - I.a;
    if (I.singular_a) {
        const double a = I.a;
        return integrate([&](double u) { return 2.0 * u * b(a + u * u); }, 0.0, std::sqrt(len), opt);
    }
    if (I.singular_b) {
        const double e = I.b;
        return integrate([&](double u) { return 2.0 * u * b(e - u * u); }, 0.0, std::sqrt(len), opt);
    }
    return integrate(b, I.a, I.b, opt);
}

Box negated(const Box& b) {
    Box out;
    for (size_t k = 0; k < b.lo.size(); ++k) {
        out.lo.push_back(-b.hi[k]);
        out.hi.push_back(-b.lo[k]);
    }
    return out;
}

SheetExtent negated(const SheetExtent& e) {
    if (e.state != SheetExtent::State::Bounded) return e;
    return SheetExtent::bounded(negated(e.box));
}

SheetReport sheet(const GoodPolytope& Q, bool certify, const VolumeOptions& opt) {
    SheetReport r;
    GoodPolytope P = Q;
    if (P.upper.state == SheetExtent::State::Empty) return r;
    if (P.upper.state == SheetExtent::State::Unknown) {
        P.upper = scan_upper_extent(P);
        if (P.upper.state == SheetExtent::State::Unknown)
            throw Error(ErrorKind::DecompositionRequired,
                        "cannot bound the polytope on one sheet; supply bound_box or split it");
        if (P.upper.state == SheetExtent::State::Empty) return r;
    } else if (certify) {
        verify_upper_box(P);
    }
    r.present = true;
    r.volume = upper_volume(P, opt, &r.plan);
    return r;
}

}  // namespace

GoodPolytope map_lower_sheet(const GoodPolytope& P) {
    GoodPolytope Q;
    Q.ambient_dim = P.ambient_dim;
    for (const auto& H : P.facets) Q.facets.push_back(sheet_swap(H));
    Q.upper = negated(P.lower);
    Q.lower = negated(P.upper);
    return Q;
}

ComplexVolume upper_volume(const GoodPolytope& P, const VolumeOptions& opt, SlicePlan* plan_out) {
    const SlicePlan plan = breakpoints(P, opt);
    ComplexVolume total;
    for (const auto& I : plan.intervals) {
        const auto v = integrate_interval(P, I, opt);
        total.value += v.value;
        total.abs_err += v.abs_err;
    }
    if (plan_out) *plan_out = plan;
    return total;
}

VolumeReport volume_report(const GoodPolytope& P, const VolumeOptions& opt) {
    validate_good_polytope(P);
    if (P.ambient_dim > 3) {
        OracleOptions o;
        o.rel_tol = opt.rel_tol;
        const auto ex = epsilon_extrapolate(P, opt.eps, o);
        if (!ex.converged)
            throw Error(ErrorKind::NonConvergence, "epsilon extrapolation did not converge");
        VolumeReport r;
        r.total = ex.volume;
        return r;
    }
    VolumeReport r;
    r.upper = sheet(P, true, opt);
    GoodPolytope L = map_lower_sheet(P);
    if (P.lower.state == SheetExtent::State::Unknown && lower_sheet_provably_empty(P))
        L.upper = SheetExtent::empty();
    r.lower = sheet(L, true, opt);
    r.total.value = r.upper.volume.value + r.lower.volume.value;
    r.total.abs_err = r.upper.volume.abs_err + r.lower.volume.abs_err;
    return r;
}

ComplexVolume volume(const GoodPolytope& P, const VolumeOptions& opt) { return volume_report(P, opt).total; }

void EpsilonSchedule::validate() const {
    if (!(eps0 >= 0.0) || !std::isfinite(eps0)) throw Error(ErrorKind::Config, "eps0 must be a non-negative number");
    if (!(ratio > 0.0 && ratio < 1.0)) throw Error(ErrorKind::Config, "eps ratio must lie in (0, 1)");
    if (count < 3) throw Error(ErrorKind::Config, "at least three eps values are needed");
    if (budget < 64) throw Error(ErrorKind::Config, "budget must be at least 64");
}

}  // namespace adsvol
