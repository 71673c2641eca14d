// Closed-form convolutions of weighted curve measures vs the mollified
// brute-force oracle.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>
#include <random>

#include "exid/measures.hpp"

using namespace exid;

namespace {
const Density2D kOne = [](const Vec2&) { return std::complex<double>{1.0, 0.0}; };
constexpr double kSqrt2 = 1.4142135623730951;

double rel_err(std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) / std::max(std::abs(b), 1e-14);
}
}  // namespace

TEST_CASE("circle convolution closed form, hand values") {
    CircleDensity unit{1.0, kOne};
    auto v = circle_conv_closed(unit, unit, {kSqrt2, 0.0});
    REQUIRE(v.status == ConvStatus::finite);
    CHECK_THAT(v.value.real(), Catch::Matchers::WithinRel(2.0, 1e-12));
    CHECK(std::abs(v.value.imag()) < 1e-14);

    CircleDensity small{1.0, kOne}, big{2.0, kOne};
    auto out = circle_conv_closed(small, big, {4.0, 0.0});
    CHECK(out.status == ConvStatus::empty_support);
    CHECK(out.value == std::complex<double>{0.0, 0.0});

    // g1(xi) = xi_1 weighted case.
    CircleDensity g1{1.0, [](const Vec2& p) { return std::complex<double>{p[0], 0.0}; }};
    auto w = circle_conv_closed(g1, unit, {kSqrt2, 0.0});
    REQUIRE(w.status == ConvStatus::finite);
    CHECK_THAT(w.value.real(), Catch::Matchers::WithinRel(kSqrt2, 1e-12));
}

TEST_CASE("circle convolution tangent guard band") {
    CircleDensity unit{1.0, kOne};
    auto v = circle_conv_closed(unit, unit, {2.0, 0.0});
    CHECK(v.status == ConvStatus::tangent_divergent);
    auto w = circle_conv_closed(unit, unit, {2.0 * (1.0 - 5e-7), 0.0});
    CHECK(w.status == ConvStatus::tangent_divergent);
    CHECK_THROWS_AS(circle_conv_closed(unit, unit, {0.0, 0.0}),
                    DegenerateContinuumError);
}

TEST_CASE("circle closed form matches mollified oracle") {
    CircleDensity unit{1.0, kOne};
    const Vec2 x{kSqrt2, 0.0};
    auto closed = circle_conv_closed(unit, unit, x);
    auto oracle = circle_conv_oracle(unit, unit, x, 0.01, 2048);
    CHECK(rel_err(oracle, closed.value) < 1e-3);
    // Mollifier refinement: half sigma shrinks the discrepancy.
    auto finer = circle_conv_oracle(unit, unit, x, 0.005, 4096);
    CHECK(std::abs(finer - closed.value) < std::abs(oracle - closed.value));
}

TEST_CASE("hyperbola convolution closed form, hand values") {
    HyperbolaDensity unit{1.0, kOne};
    auto v = hyperbola_conv_closed(unit, unit, {0.0, std::sqrt(5.0)});
    REQUIRE(v.status == ConvStatus::finite);
    CHECK_THAT(v.value.real(),
               Catch::Matchers::WithinRel(4.0 / std::sqrt(5.0), 1e-12));

    auto empty = hyperbola_conv_closed(unit, unit, {0.0, 1.5});
    CHECK(empty.status == ConvStatus::empty_support);

    // Lorentz invariance: x = (2,3) has the same hyperbolic radius as (0, sqrt 5).
    auto w = hyperbola_conv_closed(unit, unit, {2.0, 3.0});
    REQUIRE(w.status == ConvStatus::finite);
    CHECK_THAT(w.value.real(),
               Catch::Matchers::WithinRel(4.0 / std::sqrt(5.0), 1e-12));

    CHECK_THROWS_AS(hyperbola_conv_closed(unit, unit, {0.0, -2.0}), WrongSheetError);
}

TEST_CASE("hyperbola closed form matches mollified oracle") {
    HyperbolaDensity unit{1.0, kOne};
    const Vec2 x{0.0, std::sqrt(5.0)};
    auto closed = hyperbola_conv_closed(unit, unit, x);
    auto oracle = hyperbola_conv_oracle(unit, unit, x, 0.01, 6.0);
    CHECK(rel_err(oracle, closed.value) < 1e-3);
}

TEST_CASE("oracle agreement on random polynomial densities") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 6; ++trial) {
        const double c0 = unif(rng), c1 = unif(rng), c2 = unif(rng);
        const double d0 = unif(rng), d1 = unif(rng), d2 = unif(rng);
        Density2D ga = [=](const Vec2& p) {
            return std::complex<double>{2.0 + c0 + c1 * p[0] + c2 * p[1] * p[1],
                                        0.3 * c1 * p[1]};
        };
        Density2D gb = [=](const Vec2& p) {
            return std::complex<double>{2.0 + d0 + d1 * p[1], 0.2 * d2 * p[0]};
        };

        const double r1 = 0.6 + 0.5 * unif(rng) * 0.5;
        const double r2 = r1 + 0.4 + 0.3 * std::abs(unif(rng));
        CircleDensity a{r1, ga}, b{r2, gb};
        const double lo = r2 - r1, hi = r1 + r2;
        const double ax = lo + (0.2 + 0.6 * std::abs(unif(rng))) * (hi - lo);
        const double th = 3.0 * unif(rng);
        const Vec2 x{ax * std::cos(th), ax * std::sin(th)};
        auto closed = circle_conv_closed(a, b, x);
        REQUIRE(closed.status == ConvStatus::finite);
        auto coarse = conv_oracle(SurfaceKind::circle, ga, gb, r1, r2, x, 0.01);
        auto fine = circle_conv_oracle(a, b, x, 0.005, 4096);
        CHECK(rel_err(coarse, closed.value) < 1e-2);
        CHECK(rel_err(fine, closed.value) < 1e-3);

        // Symmetry of the closed form.
        auto swapped = circle_conv_closed(b, a, x);
        CHECK(std::abs(swapped.value - closed.value) < 1e-12 * std::abs(closed.value));
    }
}

TEST_CASE("hyperbola oracle agreement with boosted points and decaying density") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 4; ++trial) {
        const double c0 = unif(rng), c1 = unif(rng);
        Density2D ga = [=](const Vec2& p) {
            return std::complex<double>{(1.5 + c0 + 0.5 * c1 * p[0]), 0.0} *
                   std::exp(-0.25 * p[0] * p[0]);
        };
        Density2D gb = [=](const Vec2& p) {
            return std::complex<double>{1.2 - 0.3 * c0, 0.1 * c1} *
                   std::exp(-0.2 * p[0] * p[0]);
        };
        const double m1 = 0.7 + 0.2 * std::abs(unif(rng));
        const double m2 = m1 + 0.5 * std::abs(unif(rng));
        HyperbolaDensity a{m1, ga}, b{m2, gb};
        const double v = (m1 + m2) * (1.15 + 0.8 * std::abs(unif(rng)));
        const double g = 0.8 * unif(rng);
        const Vec2 x = lorentz_boost(-g, {0.0, v});
        auto closed = hyperbola_conv_closed(a, b, x);
        REQUIRE(closed.status == ConvStatus::finite);
        auto coarse = hyperbola_conv_oracle(a, b, x, 0.01);
        auto fine = hyperbola_conv_oracle(a, b, x, 0.005);
        CHECK(rel_err(coarse, closed.value) < 1e-2);
        CHECK(rel_err(fine, closed.value) < 1e-3);
        // Lorentz covariance: boosting densities and the point together is
        // the identity of the construction.
        auto sym = hyperbola_conv_closed(b, a, x);
        CHECK(std::abs(sym.value - closed.value) < 1e-12 * std::abs(closed.value));
    }
}

TEST_CASE("hyperbola oracle truncation doubling check") {
    HyperbolaDensity unit{1.0, kOne};
    auto v = hyperbola_conv_oracle_checked(unit, unit, {0.3, 2.6}, 0.01, 6.0);
    auto closed = hyperbola_conv_closed(unit, unit, {0.3, 2.6});
    CHECK(rel_err(v, closed.value) < 1e-2);
}

TEST_CASE("support status agrees with the geometry module") {
    CircleDensity a{0.8, kOne}, b{1.7, kOne};
    for (double ax : {0.3, 0.95, 2.2, 2.8}) {
        auto conv = circle_conv_closed(a, b, {ax, 0.1});
        bool geo_ok = true;
        try {
            circle_points(CirclePair(0.8, 1.7), {ax, 0.1});
        } catch (const EmptyIntersectionError&) {
            geo_ok = false;
        }
        CHECK((conv.status != ConvStatus::empty_support) == geo_ok);
    }
}
