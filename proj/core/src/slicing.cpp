#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "slice_geometry.hpp"

namespace adsvol {

namespace {

constexpr double kPi = std::numbers::pi;

double point_scale(const QuadricHalfSpace& H, const MVector& x) {
    const double nx = std::sqrt(norm2_euclid(x));
    const double nb = std::sqrt(norm2_euclid(H.b));
    return std::abs(H.a) * nx * nx + nb * nx + std::abs(H.c);
}

enum class Member { Out, In, Tie };

Member member_except(const std::vector<QuadricHalfSpace>& F, const MVector& x, int self) {
    bool tie = false;
    for (int j = 0; j < static_cast<int>(F.size()); ++j) {
        if (j == self) continue;
        const double q = q_value(F[static_cast<size_t>(j)], x);
        const double tol = 1e-10 * point_scale(F[static_cast<size_t>(j)], x);
        if (q > tol) return Member::Out;
        if (q >= -tol) tie = true;
    }
    return tie ? Member::Tie : Member::In;
}

// Membership of a face piece in every other facet, tested at interior points of the piece.
// A piece that ties everywhere (coincident facets) goes to the facet with the smaller index.
template <class PointAt>
bool piece_inside(const std::vector<QuadricHalfSpace>& F, int self, PointAt point_at) {
    for (double f : {0.5, 0.25, 0.75, 0.125, 0.875}) {
        const Member m = member_except(F, point_at(f), self);
        if (m != Member::Tie) return m == Member::In;
    }
    for (int j = 0; j < self; ++j) {
        const double q = q_value(F[static_cast<size_t>(j)], point_at(0.5));
        if (q >= -1e-10 * point_scale(F[static_cast<size_t>(j)], point_at(0.5))) return false;
    }
    return true;
}

MVector slice_point(int dim, double x0, double x1, double t) {
    if (dim == 2) return MVector({x0, t}, lorentz(1));
    return MVector({x0, x1, t}, lorentz(2));
}

int count_crossings(double phi0, double phi1) {
    const double u0 = (phi0 - kPi / 2) / kPi;
    const double u1 = (phi1 - kPi / 2) / kPi;
    return std::max(0, static_cast<int>(std::ceil(u1) - std::floor(u0)) - 1);
}

std::vector<Arc> circle_arcs(const std::vector<QuadricHalfSpace>& F, const detail::Slice& s, size_t i) {
    const auto& ei = s.elems[i];
    const double R = std::sqrt(ei.rho);
    std::vector<double> sig;
    for (size_t j = 0; j < s.elems.size(); ++j) {
        if (j == i) continue;
        const auto& ej = s.elems[j];
        double sg = 2.0;
        if (ej.kind == detail::SliceElem::Kind::Circle) {
            if (ej.rho <= 0.0) continue;
            const double dv = ej.v1 - ei.v1;
            if (std::abs(dv) <= 1e-14 * (std::abs(ei.v1) + std::abs(ej.v1) + R)) continue;
            sg = (0.5 * dv + (ei.rho - ej.rho) / (2.0 * dv)) / R;
        } else if (ej.kind == detail::SliceElem::Kind::Line) {
            sg = (ej.L - ei.v1) / R;
        }
        if (std::abs(sg) < 1.0) sig.push_back(sg);
    }
    std::sort(sig.begin(), sig.end());
    sig.erase(std::unique(sig.begin(), sig.end()), sig.end());

    const size_t m = sig.size();
    std::vector<double> sv(m + 2), al(m + 2);
    sv[0] = -1.0;
    al[0] = -kPi / 2;
    for (size_t k = 0; k < m; ++k) {
        sv[k + 1] = sig[k];
        al[k + 1] = std::asin(sig[k]);
    }
    sv[m + 1] = 1.0;
    al[m + 1] = kPi / 2;

    std::vector<bool> keep_r(m + 1);
    bool any = false, all = true;
    for (size_t k = 0; k <= m; ++k) {
        keep_r[k] = piece_inside(F, ei.facet, [&](double f) {
            const double ph = al[k] + f * (al[k + 1] - al[k]);
            return slice_point(3, R * std::cos(ph), ei.v1 + R * std::sin(ph), s.t);
        });
        any = any || keep_r[k];
        all = all && keep_r[k];
    }
    if (!any) return {};
    if (all) {
        Arc full;
        full.phi0 = -kPi / 2;
        full.phi1 = 3 * kPi / 2;
        full.s0 = -1.0;
        full.s1 = -1.0;
        full.crossings = 2;
        return {full};
    }

    // Cyclic pieces: R_0..R_m then L_m..L_0.
    struct Piece {
        double pa, pb, sa, sb;
        bool keep;
    };
    const size_t N = 2 * (m + 1);
    std::vector<Piece> pieces(N);
    for (size_t k = 0; k <= m; ++k) {
        pieces[k] = {al[k], al[k + 1], sv[k], sv[k + 1], keep_r[k]};
        pieces[N - 1 - k] = {kPi - al[k + 1], kPi - al[k], sv[k + 1], sv[k], keep_r[k]};
    }
    size_t p0 = 0;
    while (pieces[p0].keep) ++p0;

    std::vector<Arc> arcs;
    bool open = false;
    Arc cur;
    for (size_t q = p0 + 1; q <= p0 + N; ++q) {
        const size_t p = q % N;
        const double off = q >= N ? 2 * kPi : 0.0;
        const Piece& pc = pieces[p];
        if (pc.keep) {
            if (!open) {
                cur = Arc{};
                cur.phi0 = pc.pa + off;
                cur.s0 = pc.sa;
                open = true;
            } else if (p == m + 1 || p == 0) {
                ++cur.crossings;
            }
            cur.phi1 = pc.pb + off;
            cur.s1 = pc.sb;
        } else if (open) {
            arcs.push_back(cur);
            open = false;
        }
    }
    if (open) arcs.push_back(cur);
    return arcs;
}

void extend(std::vector<double>& lo, std::vector<double>& hi, size_t k, double v) {
    lo[k] = std::min(lo[k], v);
    hi[k] = std::max(hi[k], v);
}

detail::Slice slice_of(const GoodPolytope& P, double t) {
    if (P.ambient_dim != 2 && P.ambient_dim != 3)
        throw Error(ErrorKind::InvalidInput, "slicing is implemented for ambient dimension 2 and 3");
    return detail::make_slice(P.facets, P.ambient_dim, t);
}

}  // namespace

Arc Arc::from_angles(double phi0, double phi1) {
    if (!(phi1 > phi0)) throw Error(ErrorKind::InvalidInput, "arc needs phi1 > phi0");
    Arc a;
    a.phi0 = phi0;
    a.phi1 = phi1;
    a.s0 = std::sin(phi0);
    a.s1 = std::sin(phi1);
    a.crossings = count_crossings(phi0, phi1);
    return a;
}

namespace detail {

double facet_scale(const std::vector<QuadricHalfSpace>& facets) {
    double sc = 1.0;
    for (const auto& H : facets) {
        double bmax = 0.0;
        for (double v : H.b.coords) bmax = std::max(bmax, std::abs(v));
        if (H.a != 0.0) {
            const double r = std::sqrt(std::abs(discriminant(H))) / (2 * std::abs(H.a));
            sc = std::max(sc, bmax / (2 * std::abs(H.a)) + r);
        } else if (bmax > 0.0) {
            sc = std::max(sc, std::abs(H.c) / bmax);
        }
    }
    return sc;
}

Slice make_slice(const std::vector<QuadricHalfSpace>& facets, int dim, double t) {
    Slice s;
    s.dim = dim;
    s.t = t;
    const int n = dim - 1;
    double line_lo = -INFINITY, line_hi = INFINITY;
    bool top = false;
    for (size_t i = 0; i < facets.size(); ++i) {
        const auto& H = facets[i];
        SliceElem e;
        e.facet = static_cast<int>(i);
        const double bn = H.b[n];
        if (H.a != 0.0) {
            e.kind = SliceElem::Kind::Circle;
            e.a_sign = H.a > 0 ? 1 : -1;
            const double vn = -bn / (2 * H.a);
            const double sq = discriminant(H) / (4 * H.a * H.a);
            e.rho = (t - vn) * (t - vn) + sq;
            e.v1 = dim == 3 ? -H.b[1] / (2 * H.a) : 0.0;
            if (e.a_sign > 0) {
                if (e.rho <= 0.0) s.empty = true;
                else top = true;
            }
        } else if (dim == 3 && H.b[1] != 0.0) {
            e.kind = SliceElem::Kind::Line;
            e.L = (bn * t - H.c) / H.b[1];
            e.side = H.b[1] > 0 ? 1 : -1;
            if (e.side > 0) line_hi = std::min(line_hi, e.L);
            else line_lo = std::max(line_lo, e.L);
        } else {
            e.kind = SliceElem::Kind::Const;
            e.ok = -bn * t + H.c <= 0.0;
            if (!e.ok) s.empty = true;
        }
        s.elems.push_back(e);
    }
    if (line_lo > line_hi) s.empty = true;
    s.bounded = top || s.empty;
    return s;
}

std::vector<FaceSlice> faces_of(const std::vector<QuadricHalfSpace>& F, const Slice& s) {
    if (s.empty) return {};
    if (!s.bounded)
        throw Error(ErrorKind::DecompositionRequired,
                    "slice at x_n = " + std::to_string(s.t) + " is unbounded; supply a bounded piece");
    std::vector<FaceSlice> out;
    const int n = s.dim - 1;
    for (size_t i = 0; i < s.elems.size(); ++i) {
        const auto& e = s.elems[i];
        if (e.kind != SliceElem::Kind::Circle || e.rho <= 0.0) continue;
        FaceSlice fs;
        fs.facet_id = e.facet;
        fs.ambient_dim = s.dim;
        fs.r_F = std::sqrt(e.rho);
        fs.orientation = e.a_sign > 0 ? FaceOrientation::Top : FaceOrientation::Bottom;
        std::vector<double> c(static_cast<size_t>(s.dim), 0.0);
        c[static_cast<size_t>(n)] = s.t;
        if (s.dim == 3) c[1] = e.v1;
        fs.center = MVector(c, lorentz(n));
        if (s.dim == 3) {
            fs.arcs = circle_arcs(F, s, i);
            if (fs.arcs.empty()) continue;
        } else {
            const MVector x = slice_point(2, fs.r_F, 0.0, s.t);
            if (!piece_inside(F, e.facet, [&](double) { return x; })) continue;
            fs.points = 2;
        }
        out.push_back(std::move(fs));
    }
    return out;
}

Complex b_of(const std::vector<FaceSlice>& faces, int dim) {
    Complex b{0.0, 0.0};
    for (const auto& f : faces) {
        const double o = f.orientation == FaceOrientation::Top ? 1.0 : -1.0;
        if (dim == 3) b -= 0.5 * o * face_volume_dh1(f) / f.r_F;
        else b -= o * f.points / f.r_F;
    }
    return b;
}

std::vector<Feature> features(const Slice& s) {
    std::vector<Feature> out;
    if (s.empty) return out;
    for (const auto& e : s.elems) {
        if (e.kind == SliceElem::Kind::Circle && e.rho > 0.0) {
            const double R = std::sqrt(e.rho);
            if (s.dim == 3) {
                out.push_back({e.facet, 0, e.v1 - R});
                out.push_back({e.facet, 1, e.v1 + R});
            } else {
                out.push_back({e.facet, 0, R});
            }
        } else if (e.kind == SliceElem::Kind::Line) {
            out.push_back({e.facet, 0, e.L});
        }
    }
    return out;
}

std::vector<int> signature(const std::vector<FaceSlice>& faces, bool nonempty) {
    std::vector<int> sig{nonempty ? 1 : 0};
    for (const auto& f : faces) {
        sig.push_back(f.facet_id);
        sig.push_back(static_cast<int>(f.arcs.size()));
        int cr = 0;
        for (const auto& a : f.arcs) cr += a.crossings;
        sig.push_back(cr);
        sig.push_back(f.points);
    }
    return sig;
}

Extent extent_of(const std::vector<FaceSlice>& faces, int dim, double t) {
    Extent ex;
    const size_t d = static_cast<size_t>(dim);
    ex.lo.assign(d, INFINITY);
    ex.hi.assign(d, -INFINITY);
    for (const auto& f : faces) {
        if (f.orientation == FaceOrientation::Top) ex.nonempty = true;
    }
    if (!ex.nonempty) return ex;
    for (const auto& f : faces) {
        const double R = f.r_F;
        if (dim == 2) {
            extend(ex.lo, ex.hi, 0, -R);
            extend(ex.lo, ex.hi, 0, R);
            continue;
        }
        const double v1 = f.center[1];
        for (const auto& a : f.arcs) {
            auto add = [&](double ph) {
                extend(ex.lo, ex.hi, 0, R * std::cos(ph));
                extend(ex.lo, ex.hi, 1, v1 + R * std::sin(ph));
            };
            add(a.phi0);
            add(a.phi1);
            for (double k = std::ceil(a.phi0 / (kPi / 2)); k * (kPi / 2) < a.phi1; k += 1.0) add(k * (kPi / 2));
        }
    }
    ex.lo[d - 1] = ex.hi[d - 1] = t;
    return ex;
}

std::vector<Event> analytic_events(const std::vector<QuadricHalfSpace>& F, int dim) {
    std::vector<Event> ev;
    const int n = dim - 1;
    struct Circ {
        double vn, s;
    };
    std::vector<Circ> circles;
    struct Ln {
        double slope, icpt;
    };
    std::vector<Ln> lines;
    for (const auto& H : F) {
        const double bn = H.b[n];
        if (H.a != 0.0) {
            const double vn = -bn / (2 * H.a);
            const double s = discriminant(H) / (4 * H.a * H.a);
            if (s < 0.0) {
                const double w = std::sqrt(-s);
                ev.push_back({vn - w, true});
                ev.push_back({vn + w, true});
            }
            circles.push_back({vn, s});
        } else if (dim == 3 && H.b[1] != 0.0) {
            lines.push_back({bn / H.b[1], -H.c / H.b[1]});
        } else if (bn != 0.0) {
            ev.push_back({H.c / bn, false});
        }
    }
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j) {
            const double ds = lines[i].slope - lines[j].slope;
            if (ds != 0.0) ev.push_back({(lines[j].icpt - lines[i].icpt) / ds, false});
        }
    if (dim == 2) {
        for (size_t i = 0; i < circles.size(); ++i)
            for (size_t j = i + 1; j < circles.size(); ++j) {
                const double dv = circles[i].vn - circles[j].vn;
                if (dv == 0.0) continue;
                const double num = circles[i].vn * circles[i].vn - circles[j].vn * circles[j].vn + circles[i].s -
                                   circles[j].s;
                ev.push_back({num / (2 * dv), false});
            }
    }
    return ev;
}

}  // namespace detail

Complex face_volume_dh1(const std::vector<Arc>& arcs) {
    Complex v{0.0, 0.0};
    for (const auto& a : arcs) {
        if (a.crossings == 2 && a.s0 == a.s1 && std::abs(a.phi1 - a.phi0 - 2 * kPi) < 1e-12) {
            v += Complex(0.0, 2 * kPi);
            continue;
        }
        if (std::abs(a.s0) >= 1.0 || std::abs(a.s1) >= 1.0)
            throw Error(ErrorKind::IllConditionedArc, "arc endpoint on the axis x0 = 0");
        v += Complex(std::atanh(a.s1) - std::atanh(a.s0), kPi * a.crossings);
    }
    return v;
}

Complex face_volume_dh1(const FaceSlice& fs) { return face_volume_dh1(fs.arcs); }

std::vector<FaceSlice> slice_faces(const GoodPolytope& P, double t) {
    return detail::faces_of(P.facets, slice_of(P, t));
}

Complex integrand_b(const GoodPolytope& P, double t) {
    return detail::b_of(slice_faces(P, t), P.ambient_dim);
}

namespace {

struct SampleState {
    std::vector<detail::Feature> feats;
    std::vector<int> sig;
};

SampleState sample_state(const GoodPolytope& P, double t) {
    const auto s = slice_of(P, t);
    const auto faces = detail::faces_of(P.facets, s);
    const auto ex = detail::extent_of(faces, P.ambient_dim, t);
    return {detail::features(s), detail::signature(faces, ex.nonempty)};
}

template <class Same>
double bisect(double a, double b, double tol, Same same_as_a) {
    for (int it = 0; it < 200 && b - a > tol; ++it) {
        const double m = 0.5 * (a + b);
        if (same_as_a(m)) a = m;
        else b = m;
    }
    return 0.5 * (a + b);
}

std::optional<double> feature_pos(const std::vector<detail::Feature>& fs, int facet, int branch) {
    for (const auto& f : fs)
        if (f.facet == facet && f.branch == branch) return f.pos;
    return std::nullopt;
}

}  // namespace

SlicePlan breakpoints(const GoodPolytope& P, const VolumeOptions& opt) {
    if (P.upper.state != SheetExtent::State::Bounded)
        throw Error(ErrorKind::DecompositionRequired, "upper-sheet extent is not known");
    const int n = P.ambient_dim - 1;
    SlicePlan plan;
    plan.t_lo = P.upper.box.lo[static_cast<size_t>(n)];
    plan.t_hi = P.upper.box.hi[static_cast<size_t>(n)];
    const double range = plan.t_hi - plan.t_lo;
    if (!(range > 0.0)) return plan;

    const double merge = std::max(1e-9 * range, 4 * opt.bisect_tol * range);
    std::vector<detail::Event> ev;
    for (const auto& e : detail::analytic_events(P.facets, P.ambient_dim))
        if (e.t > plan.t_lo - merge && e.t < plan.t_hi + merge) ev.push_back(e);

    const int N = std::max(2, opt.samples);
    const double tol = opt.bisect_tol * range;
    std::vector<double> ts(static_cast<size_t>(N) + 1);
    std::vector<SampleState> st(ts.size());
    for (int k = 0; k <= N; ++k) {
        ts[static_cast<size_t>(k)] = k == N ? plan.t_hi : plan.t_lo + range * k / N;
        st[static_cast<size_t>(k)] = sample_state(P, ts[static_cast<size_t>(k)]);
    }
    for (size_t k = 0; k + 1 < ts.size(); ++k) {
        const auto& A = st[k];
        const auto& B = st[k + 1];
        if (A.sig != B.sig) {
            const auto sigA = A.sig;
            ev.push_back({bisect(ts[k], ts[k + 1], tol, [&](double t) { return sample_state(P, t).sig == sigA; }),
                          false, false});
        }
        for (size_t i = 0; i < A.feats.size(); ++i)
            for (size_t j = i + 1; j < A.feats.size(); ++j) {
                const auto& fi = A.feats[i];
                const auto& fj = A.feats[j];
                const auto bi = feature_pos(B.feats, fi.facet, fi.branch);
                const auto bj = feature_pos(B.feats, fj.facet, fj.branch);
                if (!bi || !bj) continue;
                const double da = fi.pos - fj.pos, db = *bi - *bj;
                if ((da < 0) == (db < 0)) continue;
                const bool neg = da < 0;
                ev.push_back({bisect(ts[k], ts[k + 1], tol,
                                     [&](double t) {
                                         const auto fs = detail::features(slice_of(P, t));
                                         const auto pi = feature_pos(fs, fi.facet, fi.branch);
                                         const auto pj = feature_pos(fs, fj.facet, fj.branch);
                                         if (!pi || !pj) return true;
                                         return (*pi - *pj < 0) == neg;
                                     }),
                              false, false});
            }
    }

    std::sort(ev.begin(), ev.end(), [](const auto& x, const auto& y) { return x.t < y.t; });
    std::vector<detail::Event> pts{{plan.t_lo, false}};
    bool hi_singular = false;
    for (const auto& e : ev) {
        if (e.t >= plan.t_hi - merge) {
            hi_singular = hi_singular || e.singular;
        } else if (e.t - pts.back().t <= merge) {
            pts.back().singular = pts.back().singular || e.singular;
            if (e.exact && !pts.back().exact) pts.back() = {e.t, pts.back().singular, true};
        } else {
            pts.push_back(e);
        }
    }
    pts.push_back({plan.t_hi, hi_singular});
    for (size_t i = 1; i + 1 < pts.size(); ++i) plan.breakpoints.push_back(pts[i].t);
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        plan.intervals.push_back({pts[i].t, pts[i + 1].t, pts[i].singular, pts[i + 1].singular});
    return plan;
}

SheetExtent scan_upper_extent(const GoodPolytope& P) {
    const int d = P.ambient_dim;
    const double T = 8.0 * (detail::facet_scale(P.facets) + 1.0);
    const int N = 4096;
    std::vector<double> ts;
    for (int k = 0; k <= N; ++k) ts.push_back(-T + 2 * T * k / N);
    for (const auto& e : detail::analytic_events(P.facets, d)) {
        for (double dt : {-1e-9, 1e-9, 1e-6, -1e-6})
            if (std::abs(e.t + dt * (1 + std::abs(e.t))) < T) ts.push_back(e.t + dt * (1 + std::abs(e.t)));
    }
    std::sort(ts.begin(), ts.end());
    Box box;
    box.lo.assign(static_cast<size_t>(d), INFINITY);
    box.hi.assign(static_cast<size_t>(d), -INFINITY);
    bool any = false;
    for (double t : ts) {
        std::vector<FaceSlice> faces;
        try {
            faces = slice_faces(P, t);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::DecompositionRequired) return SheetExtent::unknown();
            throw;
        }
        const auto ex = detail::extent_of(faces, d, t);
        if (!ex.nonempty) continue;
        if (std::abs(t) > 0.95 * T) return SheetExtent::unknown();
        any = true;
        for (size_t k = 0; k < static_cast<size_t>(d); ++k) {
            box.lo[k] = std::min(box.lo[k], ex.lo[k]);
            box.hi[k] = std::max(box.hi[k], ex.hi[k]);
        }
    }
    if (!any) return SheetExtent::empty();
    const double h = 2 * T / N;
    for (size_t k = 0; k < static_cast<size_t>(d); ++k) {
        const double w = box.hi[k] - box.lo[k];
        const double pad = 0.05 * w + 2 * h;
        box.lo[k] -= pad;
        box.hi[k] += pad;
    }
    return SheetExtent::bounded(box);
}

void verify_upper_box(const GoodPolytope& P, int samples) {
    if (P.upper.state != SheetExtent::State::Bounded) return;
    const int d = P.ambient_dim;
    const size_t n = static_cast<size_t>(d - 1);
    const Box& box = P.upper.box;
    const double lo = box.lo[n], hi = box.hi[n];
    const double range = std::max(hi - lo, 1e-12);
    double width = 0.0;
    for (size_t k = 0; k < n + 1; ++k) width = std::max(width, box.hi[k] - box.lo[k]);
    const double slack = 1e-7 * (1.0 + width);
    auto fail = [](const std::string& why) {
        throw Error(ErrorKind::DecompositionRequired, "bound_box is not a certificate: " + why);
    };
    for (int k = 0; k <= samples; ++k) {
        const double t = lo + range * k / samples;
        const auto ex = detail::extent_of(slice_faces(P, t), d, t);
        if (!ex.nonempty) continue;
        for (size_t c = 0; c < n; ++c)
            if (ex.lo[c] < box.lo[c] - slack || ex.hi[c] > box.hi[c] + slack)
                fail("slice at x_n = " + std::to_string(t) + " leaves the box");
    }
    for (double f : {1e-6, 1e-3, 0.05, 0.5, 2.0, 10.0}) {
        for (double t : {lo - f * range, hi + f * range}) {
            std::vector<FaceSlice> faces;
            try {
                faces = slice_faces(P, t);
            } catch (const Error&) {
                fail("polytope is unbounded outside the box");
            }
            if (detail::extent_of(faces, d, t).nonempty)
                fail("polytope meets x_n = " + std::to_string(t) + " outside the box");
        }
    }
}

std::vector<SliceSample> sample_integrand(const GoodPolytope& P, int count) {
    if (P.upper.state != SheetExtent::State::Bounded || count <= 0) return {};
    const size_t n = static_cast<size_t>(P.ambient_dim - 1);
    const double lo = P.upper.box.lo[n], hi = P.upper.box.hi[n];
    std::vector<SliceSample> out;
    for (int k = 0; k < count; ++k) {
        SliceSample s;
        s.t = lo + (hi - lo) * (k + 0.5) / count;
        const auto faces = slice_faces(P, s.t);
        s.b = detail::b_of(faces, P.ambient_dim);
        for (const auto& f : faces) s.radii.emplace_back(f.facet_id, f.r_F);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace adsvol
