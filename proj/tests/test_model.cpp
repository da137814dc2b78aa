#include <adsvol/isometry.hpp>
#include <adsvol/model.hpp>
#include <adsvol/samples.hpp>
#include <doctest.h>

#include <random>

using namespace adsvol;

TEST_CASE("facet classes follow the discriminant") {
    const auto S = lorentz(2);
    const QuadricHalfSpace rie{1.0, MVector::zero(S), 1.0};    // x^2 <= -1
    const QuadricHalfSpace lor{1.0, MVector::zero(S), -1.0};   // x^2 <= 1
    const QuadricHalfSpace cone{1.0, MVector::zero(S), 0.0};
    CHECK(metric_class(lor) == MetricClass::Lorentzian);
    CHECK(metric_class(rie) == MetricClass::Riemannian);
    CHECK(metric_class(cone) == MetricClass::Degenerate);
    CHECK(face_orientation(rie) == FaceOrientation::Top);
    CHECK(face_orientation(sheet_swap(rie)) == FaceOrientation::Bottom);
    CHECK(face_orientation({0.0, MVector({0, 0, 1}, S), 1.0}) == FaceOrientation::Side);
}

TEST_CASE("center and radius") {
    const auto S = lorentz(2);
    const auto H = sphere_halfspace(2.0, MVector({0.0, 1.0, 3.0}, S), -4.0);
    const auto cr = center_radius(H);
    CHECK(cr.v[1] == doctest::Approx(1.0));
    CHECK(cr.v[2] == doctest::Approx(3.0));
    CHECK(cr.r == doctest::Approx(2.0));
    CHECK_THROWS_AS(center_radius({0.0, MVector({0, 1, 0}, S), 0.0}), Error);
}

TEST_CASE("membership uses the sheet sign") {
    const auto S = lorentz(2);
    const QuadricHalfSpace H{1.0, MVector::zero(S), 1.0};
    const MVector x({0.5, 0.0, 2.0}, S);
    CHECK(contains(H, {x, 1}));
    CHECK_FALSE(contains(H, {x, -1}));
    CHECK_THROWS_AS(contains(H, {x, 0}), Error);
}

TEST_CASE("validation") {
    CHECK_NOTHROW(validate_good_polytope(cylinder()));
    try {
        validate_good_polytope(lightcone_polytope());
        FAIL("light cone accepted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Degenerate);
        CHECK(exit_code(e.kind()) == 3);
    }
    GoodPolytope bad = cylinder();
    bad.facets[1].b[0] = 1.0;
    CHECK_THROWS_AS(validate_good_polytope(bad), Error);
}

TEST_CASE("property: embedded points lie on the quadric y.y = -1") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    for (int n : {1, 2, 3}) {
        const auto S = lorentz(n);
        for (int k = 0; k < 100; ++k) {
            MVector x = MVector::zero(S);
            for (int i = 0; i <= n; ++i) x[i] = U(rng);
            if (std::abs(x[0]) < 1e-3) continue;
            const auto e = embed_to_hyperboloid({x, 1});
            CHECK(bilinear(e.y, e.y) == doctest::Approx(-1.0).epsilon(1e-9));
        }
    }
}

TEST_CASE("property: isometries preserve the hyperboloid pairing") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> U(-1.5, 1.5);
    const auto S = lorentz(2);
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto g = random_isometry(seed, kAllClasses, 3);
        MVector x = MVector::zero(S), y = MVector::zero(S);
        for (int i = 0; i < 3; ++i) {
            x[i] = U(rng);
            y[i] = U(rng);
        }
        x[0] = std::abs(x[0]) + 0.1;
        y[0] = std::abs(y[0]) + 0.1;
        const auto gx = try_apply_point(g, {x, 1});
        const auto gy = try_apply_point(g, {y, 1});
        if (!gx || !gy || gx->h == 0 || gy->h == 0 || gx->x[0] == 0.0 || gy->x[0] == 0.0) continue;
        const auto a = embed_to_hyperboloid({x, 1}), b = embed_to_hyperboloid({y, 1});
        const auto ga = embed_to_hyperboloid(*gx), gb = embed_to_hyperboloid(*gy);
        const double before = a.ell * b.ell * bilinear(a.y, b.y);
        const double after = ga.ell * gb.ell * bilinear(ga.y, gb.y);
        CHECK(after == doctest::Approx(before).epsilon(1e-7));
        ++checked;
    }
    CHECK(checked > 30);
}
