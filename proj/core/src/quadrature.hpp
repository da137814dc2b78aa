#pragma once

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <complex>
#include <queue>
#include <vector>

namespace adsvol::detail {

struct QuadResult {
    std::complex<double> value{0.0, 0.0};
    double abs_err = 0.0;
};

/// One Kronrod-15 / Gauss-7 panel on [a, b]; the error is |K15 - G7| in the units of the integral.
template <class F>
QuadResult gk15(const F& f, double a, double b) {
    using K = boost::math::quadrature::gauss_kronrod<double, 15>;
    const auto& x = K::abscissa();
    const auto& wk = K::weights();
    const auto& wg = boost::math::quadrature::gauss<double, 7>::weights();
    const double m = 0.5 * (a + b), h = 0.5 * (b - a);
    std::complex<double> k{0.0, 0.0}, g{0.0, 0.0};
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0.0) {
            const std::complex<double> y = f(m);
            k += wk[i] * y;
            g += wg[i / 2] * y;
            continue;
        }
        const std::complex<double> y = f(m - h * x[i]) + f(m + h * x[i]);
        k += wk[i] * y;
        if (i % 2 == 0) g += wg[i / 2] * y;
    }
    return {h * k, std::max(std::abs(h * (k - g)), 1e-15 * std::abs(h * k))};
}

/// Globally adaptive bisection: the panel with the largest error is split until the summed
/// error meets rel_tol * |I| or max_panels is reached.
template <class F>
QuadResult adaptive_gk(const F& f, double a, double b, double rel_tol, int max_panels) {
    struct Panel {
        double a, b;
        QuadResult r;
        bool operator<(const Panel& o) const { return r.abs_err < o.r.abs_err; }
    };
    std::priority_queue<Panel> heap;
    QuadResult total = gk15(f, a, b);
    heap.push({a, b, total});
    int panels = 1;
    while (panels < max_panels && total.abs_err > rel_tol * std::abs(total.value)) {
        const Panel p = heap.top();
        const double m = 0.5 * (p.a + p.b);
        if (!(m > p.a && m < p.b) || p.b - p.a < 1e-15 * (std::abs(p.a) + std::abs(p.b))) break;
        heap.pop();
        const auto l = gk15(f, p.a, m), r = gk15(f, m, p.b);
        total.value += l.value + r.value - p.r.value;
        total.abs_err += l.abs_err + r.abs_err - p.r.abs_err;
        heap.push({p.a, m, l});
        heap.push({m, p.b, r});
        ++panels;
    }
    // the running error sum drifts; recompute it from the panels
    QuadResult out;
    while (!heap.empty()) {
        out.value += heap.top().r.value;
        out.abs_err += heap.top().r.abs_err;
        heap.pop();
    }
    return out;
}

}  // namespace adsvol::detail
