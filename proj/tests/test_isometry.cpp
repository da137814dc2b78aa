#include <adsvol/isometry.hpp>
#include <adsvol/samples.hpp>
#include <adsvol/volume.hpp>
#include <doctest.h>

#include <random>

using namespace adsvol;

namespace {

QuadricHalfSpace random_halfspace(std::mt19937_64& rng, int d) {
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    QuadricHalfSpace H{U(rng), MVector::zero(lorentz(d - 1)), U(rng)};
    for (int i = 1; i < d; ++i) H.b[i] = U(rng);
    return H;
}

bool same_bits(const QuadricHalfSpace& A, const QuadricHalfSpace& B) {
    return A.a == B.a && A.c == B.c && A.b.coords == B.b.coords;
}

}  // namespace

TEST_CASE("inversions swap a and c exactly") {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 500; ++k) {
        const auto H = random_halfspace(rng, 3);
        CHECK(same_bits(apply_halfspace(InversionJ{}, H), {H.c, H.b, H.a}));
        CHECK(same_bits(apply_halfspace(InversionJminus{}, H), {-H.c, H.b, -H.a}));
    }
}

TEST_CASE("primitive checks") {
    const auto S = lorentz(2);
    CHECK_THROWS_AS(check_primitive(Translation{MVector({1.0, 0.0, 0.0}, S)}, 3), Error);
    CHECK_THROWS_AS(check_primitive(Similarity{0.0}, 3), Error);
    CHECK_THROWS_AS(check_primitive(LinearFix0{2, {1.0, 1.0, 0.0, 1.0}}, 3), Error);
    CHECK_NOTHROW(check_primitive(boost(2, 1, 0.7), 3));
    CHECK_NOTHROW(check_primitive(Similarity{-2.0}, 3));
}

TEST_CASE("property: membership is equivariant") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    int checked = 0;
    for (int d : {2, 3, 4}) {
        for (std::uint64_t seed = 0; seed < 80; ++seed) {
            const auto g = random_isometry(seed, kAllClasses, d);
            const auto H = random_halfspace(rng, d);
            MVector x = MVector::zero(lorentz(d - 1));
            for (int i = 0; i < d; ++i) x[i] = U(rng);
            const int h = (seed % 3 == 0) ? -1 : 1;
            const double q = q_value(H, x);
            if (std::abs(q) < 1e-6) continue;
            const auto gx = try_apply_point(g, {x, h});
            if (!gx || gx->h == 0) continue;
            const auto gH = apply_halfspace(g, H);
            if (std::abs(q_value(gH, gx->x)) < 1e-9) continue;
            CHECK(contains(H, {x, h}) == contains(gH, *gx));
            ++checked;
        }
    }
    CHECK(checked > 150);
}

TEST_CASE("property: inverse words undo the move") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto g = random_isometry(seed, kAllClasses, 3);
        MVector x({U(rng), U(rng), U(rng)}, lorentz(2));
        const auto gx = try_apply_point(g, {x, 1});
        if (!gx || gx->h == 0) continue;
        const auto back = try_apply_point(invert_word(g), *gx);
        REQUIRE(back);
        CHECK(back->h == 1);
        for (int i = 0; i < 3; ++i) CHECK(back->x[i] == doctest::Approx(x[i]).epsilon(1e-8));
    }
}

TEST_CASE("negative similarity swaps the sheets") {
    const auto S = lorentz(2);
    const auto p = apply_point(Similarity{-2.0}, {MVector({1.0, 0.5, 0.25}, S), 1});
    CHECK(p.h == -1);
    CHECK(p.x[0] == doctest::Approx(-2.0));
}

TEST_CASE("bounded words keep extents known and preserve the volume") {
    const auto P = cylinder(2.0);
    const auto V = volume(P);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto w = random_bounded_word(seed, P, 2);
        const auto Q = transport_polytope(w, P);
        REQUIRE(extents_known(Q));
        const auto W = volume(Q);
        CHECK(std::abs(W.value - V.value) <= std::max(1e-5, 10 * (V.abs_err + W.abs_err)));
    }
}
