#include <adsvol/samples.hpp>
#include <adsvol/volume.hpp>
#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace adsvol;

namespace {

// P cut by x_n <= m (below) or x_n >= m (above)
GoodPolytope cut(GoodPolytope P, double m, bool below) {
    const int d = P.ambient_dim;
    MVector e = MVector::zero(P.sig());
    e[d - 1] = below ? -1.0 : 1.0;
    P.facets.push_back({0.0, e, below ? -m : m});
    P.upper = SheetExtent::unknown();
    return P;
}

}  // namespace

TEST_CASE("cylinder matches its closed form") {
    for (double t : {1.25, 2.0, 3.5}) {
        const auto V = volume(cylinder(t));
        const Complex want = oracle::cylinder_volume(t);
        CHECK(std::abs(V.value - want) <= 1e-9 * std::abs(want));
        CHECK(V.abs_err < 1e-8);
    }
}

TEST_CASE("full circle face is 2 pi i") {
    const auto faces = slice_faces(cylinder(2.0), 1.5);
    REQUIRE(faces.size() == 1);
    CHECK(std::abs(face_volume_dh1(faces[0]) - Complex(0, 2 * oracle::pi)) < 1e-12);
    CHECK_THROWS_AS(Arc::from_angles(1.0, 1.0), Error);
}

TEST_CASE("arc values agree with regularized quadrature") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    int n = 0;
    while (n < 20) {
        const double p0 = -oracle::pi + 2 * oracle::pi * U(rng), len = 0.01 + 6.2 * U(rng), R = 0.2 + 2 * U(rng);
        const auto a = Arc::from_angles(p0, p0 + len);
        if (std::abs(a.s0) > 0.99 || std::abs(a.s1) > 0.99) continue;
        const Complex want = oracle::arc_length_limit(p0, p0 + len, R);
        CHECK(std::abs(face_volume_dh1(std::vector<Arc>{a}) - want) < 1e-8);
        ++n;
    }
}

TEST_CASE("singular start of the cylinder is flagged") {
    const auto plan = breakpoints(cylinder(2.0));
    REQUIRE(!plan.intervals.empty());
    CHECK(plan.intervals.front().singular_a);
    CHECK(plan.t_lo == doctest::Approx(1.0));
}

TEST_CASE("Schlafli rate of the cylinder facet") {
    const auto P = cylinder(2.0);
    for (double t : {1.2, 1.7, 2.5}) {
        const Complex d = oracle::dtheta_dt(P.facets[0], t);
        CHECK(std::abs(std::abs(d) - 1.0 / std::sqrt(t * t - 1.0)) < 1e-6);
    }
}

TEST_CASE("lower-sheet copy has the same volume") {
    const auto P = cylinder(2.0);
    const auto L = map_lower_sheet(P);
    CHECK(L.upper.state == SheetExtent::State::Empty);
    CHECK(L.lower.state == SheetExtent::State::Bounded);
    const auto V = volume(P), W = volume(L);
    CHECK(std::abs(V.value - W.value) < 1e-9);
}

TEST_CASE("box certificate") {
    auto P = cylinder(2.0);
    P.upper.box.hi[2] = 1.5;
    CHECK_THROWS_AS(volume(P), Error);
    P.upper = SheetExtent::unknown();
    const auto ex = scan_upper_extent(P);
    REQUIRE(ex.state == SheetExtent::State::Bounded);
    CHECK(ex.box.lo[2] <= 1.0);
    CHECK(ex.box.hi[2] >= 2.0);
    P.upper = ex;
    CHECK(std::abs(volume(P).value - oracle::cylinder_volume(2.0)) < 1e-8);
}

TEST_CASE("unbounded region needs a decomposition") {
    auto P = cylinder(2.0);
    P.facets.pop_back();
    P.upper = SheetExtent::unknown();
    try {
        volume(P);
        FAIL("unbounded region accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DecompositionRequired);
    }
}

TEST_CASE("property: parity of random polytopes") {
    for (int d : {2, 3})
        for (std::uint64_t s = 0; s < 10; ++s) {
            const auto V = volume(random_good_polytope(1000 + s, d));
            const double off = d == 2 ? std::abs(V.value.imag()) : std::abs(V.value.real());
            CHECK(off <= 10 * V.abs_err + 1e-14);
        }
}

TEST_CASE("property: volume is additive under a slab cut") {
    for (int d : {2, 3})
        for (std::uint64_t s = 0; s < 6; ++s) {
            const auto P = random_good_polytope(2000 + s, d);
            const auto& b = P.upper.box;
            const double m = 0.5 * (b.lo[d - 1] + b.hi[d - 1]) + 0.1 * (b.hi[d - 1] - b.lo[d - 1]);
            const auto V = volume(P), A = volume(cut(P, m, true)), B = volume(cut(P, m, false));
            CHECK(std::abs(A.value + B.value - V.value) <= 1e-6 + 10 * (V.abs_err + A.abs_err + B.abs_err));
        }
}
