#include <adsvol/minkowski.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace adsvol;

TEST_CASE("bilinear form has n plus and one minus") {
    const auto S = lorentz(2);
    const MVector u({1.0, 2.0, 3.0}, S), v({4.0, -1.0, 2.0}, S);
    CHECK(bilinear(u, v) == doctest::Approx(4.0 - 2.0 - 6.0));
    CHECK(bilinear(u, u) == doctest::Approx(1.0 + 4.0 - 9.0));
}

TEST_CASE("causal classes and complex lengths") {
    const auto S = lorentz(1);
    CHECK(causal_class(MVector({2.0, 1.0}, S)) == CausalClass::Spacelike);
    CHECK(causal_class(MVector({1.0, 2.0}, S)) == CausalClass::Timelike);
    CHECK(causal_class(MVector({1.0, 1.0}, S)) == CausalClass::Null);
    CHECK(complex_length(MVector({3.0, 0.0}, S)) == Complex(3.0, 0.0));
    CHECK(complex_length(MVector({0.0, 2.0}, S)) == Complex(0.0, 2.0));
    CHECK_THROWS_AS(complex_length(MVector({1.0, -1.0}, S)), Error);
}

TEST_CASE("sphere volumes") {
    CHECK(sphere_volume(0) == 2.0);
    CHECK(sphere_volume(1) == doctest::Approx(2 * std::numbers::pi));
    CHECK(sphere_volume(2) == doctest::Approx(4 * std::numbers::pi));
    CHECK(sphere_volume(3) == doctest::Approx(2 * std::numbers::pi * std::numbers::pi));
    CHECK_THROWS_AS(sphere_volume(-1), Error);
}

TEST_CASE("mismatched signatures are rejected") {
    CHECK_THROWS_AS(bilinear(MVector({1.0, 0.0}, lorentz(1)), MVector({1.0, 0.0, 0.0}, lorentz(2))), Error);
}

TEST_CASE("property: form is symmetric and bilinear") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    const auto S = lorentz(3);
    for (int k = 0; k < 200; ++k) {
        MVector u = MVector::zero(S), v = MVector::zero(S), w = MVector::zero(S);
        for (int i = 0; i < 4; ++i) {
            u[i] = U(rng);
            v[i] = U(rng);
            w[i] = U(rng);
        }
        const double s = U(rng);
        CHECK(bilinear(u, v) == doctest::Approx(bilinear(v, u)));
        CHECK(bilinear(s * u + w, v) == doctest::Approx(s * bilinear(u, v) + bilinear(w, v)).epsilon(1e-12));
    }
}
