// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <adsvol/boundary.hpp>
#include <adsvol/isometry.hpp>
#include <adsvol/samples.hpp>
#include <adsvol/volume.hpp>
#include <chrono>
#include <cli.hpp>
#include <cstdio>
#include <fmt/format.h>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace adsvol;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome cylinder_closed_form() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto V = volume(cylinder(2.0));
    const double dt = seconds_since(t0);
    const Complex want = oracle::cylinder_volume(2.0);
    const double rel = std::abs(V.value - want) / std::abs(want);
    return {rel <= 1e-6 && dt < 5.0,
            fmt::format("V = {:.10f}i, -pi*acosh(2) = {:.10f}i, rel {:.2e}, {:.3f} s", V.value.imag(), want.imag(), rel, dt)};
}

Outcome inversion_bitwise() {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> U(-10.0, 10.0);
    int bad = 0;
    for (int k = 0; k < 10000; ++k) {
        QuadricHalfSpace H{U(rng), MVector({0.0, U(rng), U(rng)}, lorentz(2)), U(rng)};
        const auto j = apply_halfspace(InversionJ{}, H);
        const auto jm = apply_halfspace(InversionJminus{}, H);
        const bool ok = j.a == H.c && j.c == H.a && j.b.coords == H.b.coords && jm.a == -H.c && jm.c == -H.a &&
                        jm.b.coords == H.b.coords;
        bad += ok ? 0 : 1;
    }
    return {bad == 0, fmt::format("10000 triples, {} mismatches", bad)};
}

Outcome parity() {
    int bad = 0;
    double worst = 0.0;
    for (int d : {2, 3})
        for (std::uint64_t s = 0; s < 50; ++s) {
            const auto V = volume(random_good_polytope(s, d));
            const double off = d == 2 ? std::abs(V.value.imag()) : std::abs(V.value.real());
            worst = std::max(worst, off);
            if (off > 10 * V.abs_err) ++bad;
        }
    return {bad == 0, fmt::format("50 + 50 polytopes, {} violations, largest wrong-parity part {:.1e}", bad, worst)};
}

Outcome invariance() {
    const auto t0 = std::chrono::steady_clock::now();
    int bad = 0, done = 0, with_inversions = 0;
    double worst = 0.0;
    for (std::uint64_t s = 0; done < 25 && s < 200; ++s) {
        const int d = 2 + static_cast<int>(s % 2);
        const auto P = random_good_polytope(100 + s, d);
        const auto w = random_bounded_word(s, P, 2);
        const auto Q = transport_polytope(w, P);
        if (!extents_known(Q)) continue;
        const auto V = volume(P), W = volume(Q);
        const double dev = std::abs(V.value - W.value);
        worst = std::max(worst, dev);
        if (dev > std::max(1e-5, 10 * (V.abs_err + W.abs_err))) ++bad;
        with_inversions += inversion_count(w) > 0 ? 1 : 0;
        ++done;
    }
    const double dt = seconds_since(t0);
    return {bad == 0 && done == 25 && dt < 600,
            fmt::format("{} pairs ({} with inversions), {} failures, max deviation {:.1e}, {:.1f} s", done,
                        with_inversions, bad, worst, dt)};
}

Outcome oracle_agreement() {
    int bad = 0;
    double worst_res = 0.0;
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto P = random_good_polytope(200 + s, 3);
        const auto V = volume(P);
        const auto r = epsilon_extrapolate(P, EpsilonSchedule{});
        const double dev = std::abs(V.value - r.volume.value);
        const double res = r.residual / std::abs(V.value);
        worst_res = std::max(worst_res, res);
        if (!r.converged || dev > V.abs_err + r.volume.abs_err || res >= 1e-2) ++bad;
    }
    return {bad == 0, fmt::format("10 polytopes, {} disagreements, largest residual {:.1e} |V|", bad, worst_res)};
}

Outcome angles() {
    const double right = std::abs(minkowski_angle({1.0, 0.0}, {0.0, 1.0}) - Complex(0.0, -oracle::pi / 2));
    std::mt19937_64 rng(6);
    double sum_err = 0.0, sine_err = 0.0;
    for (int k = 0; k < 1000; ++k) {
        const auto v = oracle::random_triangle(rng);
        const auto th = vertex_angles(prepared(oracle::straight_polygon(v)));
        sum_err = std::max(sum_err, std::abs(th[0] + th[1] + th[2] - Complex(0.0, -oracle::pi)));
        const double area2 = oracle::twice_area(v[0], v[1], v[2]);
        for (int i = 0; i < 3; ++i) {
            const auto& A = v[static_cast<size_t>(i)];
            const auto& B = v[static_cast<size_t>((i + 1) % 3)];
            const auto& C = v[static_cast<size_t>((i + 2) % 3)];
            const Complex lhs = oracle::side_length(A, C) * oracle::side_length(A, B) * std::sinh(th[static_cast<size_t>(i)]);
            sine_err = std::max(sine_err, std::abs(lhs - area2) / area2);
        }
    }
    return {right <= 1e-12 && sum_err <= 1e-10 && sine_err <= 1e-10,
            fmt::format("right angle err {:.1e}, angle sum err {:.1e}, law of sines rel err {:.1e}", right, sum_err,
                        sine_err)};
}

Outcome boundary_polygons() {
    double straight = 0.0, conic = 0.0;
    for (std::uint64_t s = 0; s < 25; ++s)
        straight = std::max(straight, std::abs(polygon_volume(random_straight_polygon(s, 3 + static_cast<int>(s % 5))).value));
    for (std::uint64_t s = 0; s < 25; ++s) {
        const auto G = random_conic_polygon(s);
        conic = std::max(conic, std::abs(polygon_volume(G).value - boundary_volume_via_3d(G).value));
    }
    return {straight <= 1e-9 && conic <= 1e-4,
            fmt::format("straight max |V| {:.1e}; conic polygon vs lift max diff {:.1e}", straight, conic)};
}

Outcome conformal_invariance() {
    double worst = 0.0;
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto G = random_conic_polygon(100 + s);
        const auto H = transport_polygon(random_boundary_word(s), G);
        worst = std::max(worst, std::abs(polygon_volume(G).value - polygon_volume(H).value));
    }
    return {worst <= 1e-6, fmt::format("10 transported polygons, max diff {:.1e}", worst)};
}

Outcome correspondence() {
    double worst = 0.0;
    int nonzero = 0;
    for (std::uint64_t s = 0; s < 10; ++s) {
        const auto c = correspondence_check(random_good_polytope(300 + s, 2));
        worst = std::max(worst, std::abs(c.lhs - c.rhs));
        nonzero += std::abs(c.rhs) > 1e-6 ? 1 : 0;
    }
    return {worst <= 1e-5 && nonzero > 0, fmt::format("10 polytopes ({} non-empty), max diff {:.1e}", nonzero, worst)};
}

Outcome degenerate_rejection() {
    const std::string file = std::string(ADSVOL_DATA_DIR) + "/lightcone.json";
    auto run = [&](std::vector<const char*> argv) {
        std::ostringstream out, err;
        return cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    };
    const int validate = run({"adsvol", "volume", file.c_str()});
    const int forced = run({"adsvol", "oracle", "--force", file.c_str()});
    return {validate == 3 && forced == 6, fmt::format("volume exit {}, forced oracle exit {}", validate, forced)};
}

Outcome dh1_faces() {
    double full = 0.0;
    for (double t : {1.2, 1.5, 1.9})
        for (const auto& f : slice_faces(cylinder(2.0), t))
            full = std::max(full, std::abs(face_volume_dh1(f) - Complex(0.0, 2 * oracle::pi)));
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    double worst = 0.0;
    int n = 0;
    while (n < 100) {
        const double p0 = -oracle::pi + 2 * oracle::pi * U(rng), len = 0.01 + 6.2 * U(rng), R = 0.2 + 2 * U(rng);
        const auto a = Arc::from_angles(p0, p0 + len);
        if (std::abs(a.s0) > 0.99 || std::abs(a.s1) > 0.99) continue;
        worst = std::max(worst, std::abs(face_volume_dh1(std::vector<Arc>{a}) - oracle::arc_length_limit(p0, p0 + len, R)));
        ++n;
    }
    return {full <= 1e-8 && worst <= 1e-6, fmt::format("full circle err {:.1e}; 100 arcs max err {:.1e}", full, worst)};
}

Outcome schlafli() {
    const auto P = cylinder(2.0);
    double worst = 0.0;
    for (double t : {1.1, 1.5, 2.0, 3.0, 5.0}) {
        const Complex d = oracle::dtheta_dt(P.facets[0], t);
        worst = std::max(worst, std::abs(std::abs(d) - 1.0 / std::sqrt(t * t - 1.0)));
    }
    return {worst <= 1e-6, fmt::format("|d theta/dt| vs 1/r_F at 5 heights, max err {:.1e} (global identities via 3 and 4)", worst)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"cylinder closed form", cylinder_closed_form},
        {"inversion transport exact", inversion_bitwise},
        {"parity", parity},
        {"isometry invariance", invariance},
        {"oracle agreement", oracle_agreement},
        {"angle suite", angles},
        {"boundary polygon", boundary_polygons},
        {"conformal invariance", conformal_invariance},
        {"correspondence", correspondence},
        {"degenerate rejection", degenerate_rejection},
        {"DH1 face volume", dh1_faces},
        {"Schlafli spot-check", schlafli},
    };
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("criterion %2zu %-26s %s  %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL", o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
