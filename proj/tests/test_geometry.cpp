// Reflected-point constructions, Lorentz boosts, and frames.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <random>

#include "exid/geometry.hpp"

using namespace exid;

namespace {
constexpr double kSqrt2 = 1.4142135623730951;

Vec2 rotate(const Vec2& p, double th) {
    return {std::cos(th) * p[0] - std::sin(th) * p[1],
            std::sin(th) * p[0] + std::cos(th) * p[1]};
}
}  // namespace

TEST_CASE("circle_points hand-solved equal-radius case") {
    auto pts = circle_points(CirclePair(1.0, 1.0), {kSqrt2, 0.0});
    CHECK_FALSE(pts.tangent);
    CHECK_THAT(pts.p2_plus[0], Catch::Matchers::WithinAbs(kSqrt2 / 2, 1e-12));
    CHECK_THAT(pts.p2_plus[1], Catch::Matchers::WithinAbs(kSqrt2 / 2, 1e-12));
    CHECK_THAT(pts.p2_minus[0], Catch::Matchers::WithinAbs(kSqrt2 / 2, 1e-12));
    CHECK_THAT(pts.p2_minus[1], Catch::Matchers::WithinAbs(-kSqrt2 / 2, 1e-12));
    CHECK_THAT(pts.p1_plus[0], Catch::Matchers::WithinAbs(kSqrt2 / 2, 1e-12));
    CHECK_THAT(pts.p1_plus[1], Catch::Matchers::WithinAbs(kSqrt2 / 2, 1e-12));
    CHECK_THAT(pts.p1_minus[1], Catch::Matchers::WithinAbs(-kSqrt2 / 2, 1e-12));
}

TEST_CASE("circle_points tangency and empty intersection") {
    auto pts = circle_points(CirclePair(1.0, 2.0), {3.0, 0.0});
    CHECK(pts.tangent);
    CHECK_THAT(pts.p1_plus[0], Catch::Matchers::WithinAbs(1.0, 1e-9));
    CHECK_THAT(pts.p2_plus[0], Catch::Matchers::WithinAbs(2.0, 1e-9));
    CHECK_THAT(pts.p2_plus[1], Catch::Matchers::WithinAbs(0.0, 1e-9));

    CHECK_THROWS_AS(circle_points(CirclePair(1.0, 2.0), {4.0, 0.0}),
                    EmptyIntersectionError);
    CHECK_THROWS_AS(circle_points(CirclePair(1.0, 2.0), {0.0, 0.0}),
                    EmptyIntersectionError);
    CHECK_THROWS_AS(circle_points(CirclePair(1.0, 1.0), {0.0, 0.0}),
                    DegenerateContinuumError);
}

TEST_CASE("circle_points invariants on random configurations") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double r1 = 0.3 + unif(rng), r2 = r1 + unif(rng);
        const double lo = r2 - r1, hi = r1 + r2;
        const double ax = lo + (0.05 + 0.9 * unif(rng)) * (hi - lo);
        if (ax < 1e-3) continue;
        const double th = 2.0 * 3.141592653589793 * unif(rng);
        const Vec2 x{ax * std::cos(th), ax * std::sin(th)};
        auto pts = circle_points(CirclePair(r1, r2), x);
        // Sum constraints.
        CHECK(norm2(sub2(add2(pts.p1_plus, pts.p2_minus), x)) < 1e-10);
        CHECK(norm2(sub2(add2(pts.p1_minus, pts.p2_plus), x)) < 1e-10);
        // Membership.
        CHECK_THAT(norm2(pts.p1_plus), Catch::Matchers::WithinAbs(r1, 1e-10));
        CHECK_THAT(norm2(pts.p1_minus), Catch::Matchers::WithinAbs(r1, 1e-10));
        CHECK_THAT(norm2(pts.p2_plus), Catch::Matchers::WithinAbs(r2, 1e-10));
        CHECK_THAT(norm2(pts.p2_minus), Catch::Matchers::WithinAbs(r2, 1e-10));
        // Mirror symmetry across the line through 0 and x.
        const Vec2 vx{-x[1] / ax, x[0] / ax};
        CHECK_THAT(dot2(pts.p1_plus, vx),
                   Catch::Matchers::WithinAbs(-dot2(pts.p1_minus, vx), 1e-10));
        CHECK_THAT(dot2(pts.p2_plus, vx),
                   Catch::Matchers::WithinAbs(-dot2(pts.p2_minus, vx), 1e-10));
        CHECK(dot2(pts.p2_plus, vx) >= -1e-12);
        // Rotation equivariance.
        const double phi = 2.0 * 3.141592653589793 * unif(rng);
        auto rpts = circle_points(CirclePair(r1, r2), rotate(x, phi));
        CHECK(norm2(sub2(rpts.p1_plus, rotate(pts.p1_plus, phi))) < 1e-9);
        CHECK(norm2(sub2(rpts.p2_minus, rotate(pts.p2_minus, phi))) < 1e-9);
    }
}

TEST_CASE("lorentz_gamma hand values") {
    CHECK_THAT(lorentz_gamma({3.0, 5.0}),
               Catch::Matchers::WithinRel(std::log(2.0), 1e-14));
    CHECK_THAT(lorentz_gamma({0.0, 2.5}), Catch::Matchers::WithinAbs(0.0, 1e-15));
    CHECK_THAT(lorentz_gamma({-3.0, 5.0}),
               Catch::Matchers::WithinRel(-std::log(2.0), 1e-14));
    CHECK_THROWS_AS(lorentz_gamma({2.0, 1.0}), NonTimelikeError);
}

TEST_CASE("lorentz_boost hand values and group structure") {
    const Vec2 b = lorentz_boost(std::log(2.0), {3.0, 5.0});
    CHECK_THAT(b[0], Catch::Matchers::WithinAbs(0.0, 1e-12));
    CHECK_THAT(b[1], Catch::Matchers::WithinAbs(4.0, 1e-12));

    const Vec2 id = lorentz_boost(0.0, {0.7, 1.3});
    CHECK(id[0] == 0.7);
    CHECK(id[1] == 1.3);

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double xi = 2.0 * unif(rng);
        const Vec2 p{xi, std::abs(xi) + 0.5 + unif(rng) + 1.0};
        const double g = 1.5 * unif(rng);
        const Vec2 q = lorentz_boost(-g, lorentz_boost(g, p));
        CHECK(norm2(sub2(q, p)) < 1e-12 * (1.0 + norm2(p)));
        // Hyperbolic radius preserved.
        const Vec2 r = lorentz_boost(g, p);
        CHECK_THAT(r[1] * r[1] - r[0] * r[0],
                   Catch::Matchers::WithinRel(p[1] * p[1] - p[0] * p[0], 1e-12));
    }
}

TEST_CASE("hyperbola_points on-axis equal masses") {
    auto pts = hyperbola_points(HyperbolaPair(1.0, 1.0), {0.0, std::sqrt(5.0)});
    CHECK_FALSE(pts.tangent);
    CHECK_THAT(pts.q1_plus()[0], Catch::Matchers::WithinAbs(0.5, 1e-12));
    CHECK_THAT(pts.q1_plus()[1], Catch::Matchers::WithinAbs(std::sqrt(5.0) / 2, 1e-12));
    CHECK_THAT(pts.q1_minus()[0], Catch::Matchers::WithinAbs(-0.5, 1e-12));
    CHECK_THAT(pts.q2_plus()[0], Catch::Matchers::WithinAbs(0.5, 1e-12));
    CHECK_THAT(pts.q2_minus()[0], Catch::Matchers::WithinAbs(-0.5, 1e-12));
}

TEST_CASE("hyperbola_points tangent and empty cases") {
    auto pts = hyperbola_points(HyperbolaPair(1.0, 1.0), {0.0, 2.0});
    CHECK(pts.tangent);
    CHECK(norm2(sub2(pts.q1_plus(), Vec2{0.0, 1.0})) < 1e-8);
    CHECK(norm2(sub2(pts.q2_minus(), Vec2{0.0, 1.0})) < 1e-8);

    CHECK_THROWS_AS(hyperbola_points(HyperbolaPair(1.0, 1.0), {0.0, 1.5}),
                    EmptyIntersectionError);
    CHECK_THROWS_AS(hyperbola_points(HyperbolaPair(1.0, 1.0), {0.0, -3.0}),
                    WrongSheetError);
}

TEST_CASE("hyperbola_points off-axis composition") {
    auto pts = hyperbola_points(HyperbolaPair(1.0, 2.0), {3.0, 5.0});
    const Vec2 x{3.0, 5.0};
    CHECK(norm2(sub2(add2(pts.q1_plus(), pts.q2_minus()), x)) < 1e-10);
    CHECK(norm2(sub2(add2(pts.q1_minus(), pts.q2_plus()), x)) < 1e-10);
    // Membership on the two hyperbolas.
    auto on_hyp = [](const Vec2& q, double m) {
        return std::abs(q[1] * q[1] - q[0] * q[0] - m * m);
    };
    CHECK(on_hyp(pts.q1_plus(), 1.0) < 1e-10);
    CHECK(on_hyp(pts.q1_minus(), 1.0) < 1e-10);
    CHECK(on_hyp(pts.q2_plus(), 2.0) < 1e-9);
    CHECK(on_hyp(pts.q2_minus(), 2.0) < 1e-9);
    CHECK(pts.q1_plus()[1] > 0.0);
    CHECK(pts.q2_plus()[1] > 0.0);
}

TEST_CASE("hyperbola_points invariants on random boosted configurations") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double m1 = 0.4 + unif(rng), m2 = m1 + unif(rng);
        const double v = (m1 + m2) * (1.02 + 2.0 * unif(rng));
        const double g = 2.0 * (unif(rng) - 0.5);
        const Vec2 x = lorentz_boost(-g, {0.0, v});
        auto pts = hyperbola_points(HyperbolaPair(m1, m2), x);
        CHECK(norm2(sub2(add2(pts.q1_plus(), pts.q2_minus()), x)) < 1e-9);
        CHECK(norm2(sub2(add2(pts.q1_minus(), pts.q2_plus()), x)) < 1e-9);
        CHECK(std::abs(pts.q1_plus()[1] * pts.q1_plus()[1] -
                       pts.q1_plus()[0] * pts.q1_plus()[0] - m1 * m1) < 1e-9);
        CHECK(std::abs(pts.q2_plus()[1] * pts.q2_plus()[1] -
                       pts.q2_plus()[0] * pts.q2_plus()[0] - m2 * m2) < 1e-9);
    }
}

TEST_CASE("frames are orthonormal and decompose/recompose") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        Vec3 w{unif(rng), unif(rng), unif(rng)};
        if (norm3(w) < 1e-3) continue;
        Frame fr = Frame::from_direction(3, w);
        CHECK_THAT(norm3(fr.omega), Catch::Matchers::WithinAbs(1.0, 1e-12));
        CHECK(std::abs(dot3(fr.omega, fr.basis_perp[0])) < 1e-12);
        CHECK(std::abs(dot3(fr.omega, fr.basis_perp[1])) < 1e-12);
        CHECK(std::abs(dot3(fr.basis_perp[0], fr.basis_perp[1])) < 1e-12);
        Vec3 x{unif(rng), unif(rng), unif(rng)};
        Vec3 back = fr.recompose(fr.comp_omega(x), fr.comp_perp(x));
        Vec3 diff{back[0] - x[0], back[1] - x[1], back[2] - x[2]};
        CHECK(norm3(diff) < 1e-12);
        // Upper-hemisphere canonicalization.
        bool ok = false;
        for (int a = 2; a >= 0; --a) {
            if (std::abs(fr.omega[a]) > 1e-14) {
                ok = fr.omega[a] > 0.0;
                break;
            }
        }
        CHECK(ok);
    }
}
