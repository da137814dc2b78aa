#include <adsvol/boundary.hpp>
#include <adsvol/samples.hpp>
#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace adsvol;

TEST_CASE("right angle") {
    const Complex th = minkowski_angle({1.0, 0.0}, {0.0, 1.0});
    CHECK(std::abs(th - Complex(0.0, -oracle::pi / 2)) < 1e-12);
}

TEST_CASE("angles between vectors of one causal type") {
    const double eta = 0.8;
    // boosted spacelike vector: the angle is the rapidity
    const Complex th = minkowski_angle({1.0, 0.0}, {std::cosh(eta), std::sinh(eta)});
    CHECK(std::abs(th - Complex(eta, 0.0)) < 1e-12);
    CHECK_THROWS_AS(minkowski_angle({1.0, 1.0}, {1.0, 0.0}), Error);
}

TEST_CASE("c2 constant") { CHECK(std::abs(c2m(1) - Complex(0.0, 2.0 / oracle::pi)) < 1e-15); }

TEST_CASE("property: triangle angle sum and law of sines") {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 200; ++k) {
        const auto v = oracle::random_triangle(rng);
        const auto th = vertex_angles(prepared(oracle::straight_polygon(v)));
        REQUIRE(th.size() == 3);
        CHECK(std::abs(th[0] + th[1] + th[2] - Complex(0.0, -oracle::pi)) < 1e-10);
        const Complex lhs = oracle::side_length(v[0], v[2]) * oracle::side_length(v[0], v[1]) * std::sinh(th[0]);
        const double area2 = oracle::twice_area(v[0], v[1], v[2]);
        CHECK(std::abs(lhs - area2) < 1e-10 * area2);
    }
}

TEST_CASE("straight polygons have zero conformal volume") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto G = random_straight_polygon(s, 3 + static_cast<int>(s % 5));
        CHECK(std::abs(polygon_volume(G).value) < 1e-9);
    }
}

TEST_CASE("polygon formula agrees with the lift") {
    for (std::uint64_t s = 0; s < 4; ++s) {
        const auto G = random_conic_polygon(s);
        const auto a = polygon_volume(G), b = boundary_volume_via_3d(G);
        CHECK(std::abs(a.value - b.value) < 1e-4);
    }
}

TEST_CASE("conformal transport keeps the volume") {
    for (std::uint64_t s = 0; s < 5; ++s) {
        const auto G = random_conic_polygon(s);
        const auto H = transport_polygon(random_boundary_word(s), G);
        CHECK(std::abs(polygon_volume(G).value - polygon_volume(H).value) < 1e-6);
    }
}

TEST_CASE("transport through the light cone is refused") {
    const auto G = oracle::straight_polygon({{-0.5, -0.2}, {0.5, -0.2}, {0.5, 0.2}, {-0.5, 0.2}});
    CHECK_THROWS_AS(transport_polygon(IsometryWord{{InversionJ{}}}, G), Error);
}

TEST_CASE("null sides are refused") {
    const auto G = oracle::straight_polygon({{2.0, 0.0}, {3.0, 1.0}, {2.0, 1.0}});
    try {
        polygon_volume(G);
        FAIL("null side accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NullTangent);
    }
}

TEST_CASE("non-convex polygon cannot be lifted") {
    const auto G = oracle::straight_polygon({{2.0, 0.0}, {4.0, 0.2}, {4.1, 2.3}, {3.2, 1.1}, {2.0, 2.4}});
    CHECK(std::abs(polygon_volume(G).value) < 1e-9);
    try {
        lift_polytope(G);
        FAIL("non-convex polygon lifted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::LiftConstruction);
    }
}

TEST_CASE("half-space intersection recovers a square") {
    const auto S = lorentz(1);
    const std::vector<QuadricHalfSpace> hs{{0.0, MVector({-1, 0}, S), 2.0},
                                           {0.0, MVector({1, 0}, S), -3.0},
                                           {0.0, MVector({0, 1}, S), -0.5},
                                           {0.0, MVector({0, -1}, S), -0.5}};
    const auto G = polygon_from_halfspaces(hs);
    CHECK(G.size() == 4);
    for (const auto& v : G.vertices) {
        CHECK((v.p == doctest::Approx(2.0) || v.p == doctest::Approx(3.0)));
        CHECK(std::abs(v.q) == doctest::Approx(0.5));
    }
}

TEST_CASE("correspondence in the plane") {
    for (std::uint64_t s = 0; s < 3; ++s) {
        const auto c = correspondence_check(random_good_polytope(300 + s, 2));
        CHECK(std::abs(c.lhs - c.rhs) < 1e-5);
    }
}
