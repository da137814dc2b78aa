#pragma once

#include <cmath>
#include <utility>

#include "adsvol/boundary.hpp"

namespace adsvol::detail {

/// Conic a (p^2 - q^2) + B1 p - B2 q + c = 0, written as (p - pc)^2 - (q - qc)^2 = s.
/// Branch sigma: for s > 0 the sign of p - pc, for s < 0 the sign of q - qc.
struct ConicFrame {
    double pc = 0.0, qc = 0.0, s = 0.0, w = 0.0;

    static ConicFrame of(const QuadricHalfSpace& h) {
        ConicFrame f;
        f.pc = -h.b[0] / (2 * h.a);
        f.qc = -h.b[1] / (2 * h.a);
        f.s = discriminant(h) / (4 * h.a * h.a);
        f.w = std::sqrt(std::abs(f.s));
        return f;
    }

    LorentzPlaneVector point(int sigma, double tau) const {
        if (s > 0) return {pc + sigma * w * std::cosh(tau), qc + w * std::sinh(tau)};
        return {pc + w * std::sinh(tau), qc + sigma * w * std::cosh(tau)};
    }

    LorentzPlaneVector deriv(int sigma, double tau) const {
        if (s > 0) return {sigma * w * std::sinh(tau), w * std::cosh(tau)};
        return {w * std::cosh(tau), sigma * w * std::sinh(tau)};
    }

    std::pair<int, double> locate(const LorentzPlaneVector& x) const {
        if (s > 0) return {x.p >= pc ? 1 : -1, std::asinh((x.q - qc) / w)};
        return {x.q >= qc ? 1 : -1, std::asinh((x.p - pc) / w)};
    }
};

}  // namespace adsvol::detail
