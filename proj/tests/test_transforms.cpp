// Extension operators, k-plane transform, Fourier-slice/Plancherel
// relations, Klein-Gordon propagator.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "exid/transforms.hpp"

using namespace exid;
using std::numbers::pi;

namespace {
const std::function<cplx(const Vec3&)> kOne3 = [](const Vec3&) { return cplx{1.0, 0.0}; };

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-14); }
}  // namespace

TEST_CASE("sphere extension of the constant density") {
    SphereDensity g{1.0, 3, kOne3, 64, 128};
    CHECK(rel(extension_sphere_at(g, {0.0, 0.0, 0.0}).real(), 4.0 * pi) < 1e-12);

    // 4 pi sin|z| / |z| off the origin.
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    double max_rel = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
        Vec3 z{8.0 * unif(rng), 8.0 * unif(rng), 8.0 * unif(rng)};
        const double r = norm3(z);
        if (r < 1e-3 || r > 8.0) continue;
        const double expect = 4.0 * pi * std::sin(r) / r;
        const cplx got = extension_sphere_at(g, z);
        max_rel = std::max(max_rel, std::abs(got - expect) / (4.0 * pi));
        CHECK(std::abs(got.imag()) < 1e-10);
    }
    CHECK(max_rel < 1e-6);
}

TEST_CASE("sphere extension parity for an odd density") {
    SphereDensity g{1.0, 3, [](const Vec3& xi) { return cplx{xi[2], 0.0}; }, 48, 96};
    GridSpec grid(3, 6.0, 32);
    Field u = extension_sphere(g, grid);
    // Odd in z3: u(x, y, -z) = -u(x, y, z); vanishing on the z3 = 0 plane.
    const int n = grid.points_per_axis;
    double max_odd = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int k = 1; k < n; ++k)
                max_odd = std::max(max_odd,
                                   std::abs(u.at(i, j, k) + u.at(i, j, (n - k) % n ? n - k : 0)));
            max_odd = std::max(max_odd, std::abs(u.at(i, j, n / 2)));
        }
    CHECK(max_odd < 1e-10 * (1.0 + u.max_abs()));
}

TEST_CASE("sphere extension grid run matches pointwise evaluation") {
    SphereDensity g{1.0, 3, kOne3, 48, 96};
    GridSpec grid(3, 6.0, 32);
    Field u = extension_sphere(g, grid);
    const Vec3 z{grid.coord(0, 20), grid.coord(1, 9), grid.coord(2, 27)};
    CHECK(std::abs(u.at(20, 9, 27) - extension_sphere_at(g, z)) < 1e-10);

    CHECK_THROWS_AS(extension_sphere(g, GridSpec(3, 40.0, 16)), ResolutionError);
}

TEST_CASE("surface quadrature convergence under node doubling") {
    auto gauss = [](const Vec3& xi) {
        return cplx{std::exp(-(xi[0] * xi[0] + 0.5 * xi[1] * xi[1])), 0.2 * xi[2]};
    };
    SphereDensity a{1.0, 3, gauss, 48, 96}, b{1.0, 3, gauss, 96, 192};
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unif(-5.0, 5.0);
    double max_diff = 0.0;
    for (int t = 0; t < 10; ++t) {
        Vec3 z{unif(rng), unif(rng), unif(rng)};
        max_diff = std::max(max_diff,
                            std::abs(extension_sphere_at(a, z) - extension_sphere_at(b, z)));
    }
    CHECK(max_diff < 1e-8 * 4.0 * pi);
}

TEST_CASE("hyperboloid extension at the origin and mass scaling") {
    HyperboloidFunctionRd F;
    F.mass = 1.0;
    F.d = 2;
    F.f = [](const Vec2& xi) {
        return cplx{std::exp(-(xi[0] * xi[0] + xi[1] * xi[1])), 0.0};
    };
    F.support_radius = 6.0;
    F.nradial = 120;
    F.nangular = 120;

    // Independent direct quadrature of INT f / phi_m with a different rule.
    auto direct = [&](double m) {
        const auto rad = gauss_legendre(400, 0.0, 6.0);
        double acc = 0.0;
        for (std::size_t i = 0; i < rad.nodes.size(); ++i) {
            const double r = rad.nodes[i];
            acc += rad.weights[i] * 2.0 * pi * r * std::exp(-r * r) / phi_m(m, r);
        }
        return acc;
    };
    CHECK(std::abs(extension_hyperboloid_at(F, {0, 0, 0}).real() - direct(1.0)) < 1e-10);

    const double mass_integral = pi;  // INT e^{-|xi|^2} dxi over R^2
    F.mass = 50.0;
    const double e50 = std::abs(50.0 * extension_hyperboloid_at(F, {0, 0, 0}).real() -
                                mass_integral);
    F.mass = 100.0;
    const double e100 = std::abs(100.0 * extension_hyperboloid_at(F, {0, 0, 0}).real() -
                                 mass_integral);
    CHECK(e50 < 2e-3 * mass_integral);
    CHECK(e100 < 0.3 * e50);  // second-order in 1/m
}

TEST_CASE("hyperboloid extension time reflection symmetry") {
    HyperboloidFunctionRd F;
    F.mass = 1.0;
    F.d = 2;
    // Real and even density (evenness is required for the slice-wise
    // conjugation symmetry; an odd part maps to u(-x, -t) instead).
    F.f = [](const Vec2& xi) {
        return cplx{(1.0 + 0.3 * xi[0] * xi[0]) *
                        std::exp(-(xi[0] * xi[0] + xi[1] * xi[1])),
                    0.0};
    };
    F.support_radius = 6.5;
    F.nradial = 80;
    F.nangular = 80;
    GridSpec grid(3, 3.0, 32);
    Field u = extension_hyperboloid(F, grid);
    // f real => u(x, -t) = conj(u(x, t)).
    const int n = grid.points_per_axis;
    double max_err = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 1; k < n; ++k)
                max_err = std::max(max_err,
                                   std::abs(u.at(i, j, n - k) - std::conj(u.at(i, j, k))));
    CHECK(max_err < 1e-10 * u.max_abs());
}

TEST_CASE("paraboloid extension: free Schrodinger Gaussian in d = 1") {
    ParaboloidFunctionRd F;
    F.d = 1;
    F.f = [](const Vec2& xi) { return cplx{std::exp(-xi[0] * xi[0]), 0.0}; };
    F.support_radius = 6.5;
    F.nradial = 450;
    GridSpec grid(2, 4.0, 64);
    Field u = extension_paraboloid(F, grid);
    // INT e^{i x xi + i t xi^2 - xi^2} dxi = sqrt(pi / (1 - i t)) e^{-x^2/(4(1-it))}.
    double max_rel = 0.0;
    for (int i = 0; i < grid.points_per_axis; ++i)
        for (int j = 0; j < grid.points_per_axis; ++j) {
            const double x = grid.coord(0, i), t = grid.coord(1, j);
            const cplx a{1.0, -t};
            const cplx expect = std::sqrt(pi / a) * std::exp(-x * x / (4.0 * a));
            max_rel = std::max(max_rel, std::abs(u.at(i, j) - expect) / std::sqrt(pi));
        }
    CHECK(max_rel < 1e-8);
}

TEST_CASE("paraboloid vertex offset is a pure time phase") {
    ParaboloidFunctionRd F;
    F.d = 1;
    F.f = [](const Vec2& xi) { return cplx{1.0, 0.1} * std::exp(-xi[0] * xi[0]); };
    F.support_radius = 6.5;
    F.nradial = 300;
    GridSpec grid(2, 4.0, 64);
    Field u0 = extension_paraboloid(F, grid);
    F.vertex_offset = 0.7;
    Field ua = extension_paraboloid(F, grid);
    double max_err = 0.0;
    for (int i = 0; i < grid.points_per_axis; ++i)
        for (int j = 0; j < grid.points_per_axis; ++j) {
            const double t = grid.coord(1, j);
            max_err = std::max(max_err,
                               std::abs(ua.at(i, j) - std::polar(1.0, 0.7 * t) * u0.at(i, j)));
        }
    CHECK(max_err < 1e-12 * u0.max_abs());

    F.f = [](const Vec2&) { return cplx{0.0, 0.0}; };
    Field z = extension_paraboloid(F, grid);
    CHECK(z.max_abs() == 0.0);
}

TEST_CASE("Radon transform of a Gaussian, axis and oblique directions") {
    GridSpec grid(2, 8.0, 256);
    Field F(grid, Side::space);
    for (int i = 0; i < 256; ++i)
        for (int j = 0; j < 256; ++j) {
            const double x = grid.coord(0, i), y = grid.coord(1, j);
            F.at(i, j) = std::exp(-(x * x + y * y));
        }
    for (double th : {0.0, 0.31, 1.1, pi / 2}) {
        Frame fr = Frame::from_direction(2, {std::cos(th), std::sin(th), 0.0});
        Field R = kplane_transform(F, fr, 1);
        double max_rel = 0.0;
        for (int i = 0; i < 256; ++i) {
            const double s = R.grid.coord(0, i);
            const double expect = std::sqrt(pi) * std::exp(-s * s);
            max_rel = std::max(max_rel, std::abs(R.at(i).real() - expect) / std::sqrt(pi));
            max_rel = std::max(max_rel, std::abs(R.at(i).imag()) / std::sqrt(pi));
        }
        CHECK(max_rel < 1e-6);
    }
    CHECK_THROWS_AS(kplane_transform(F, Frame::from_direction(2, {1, 0, 0}), 2),
                    std::domain_error);
}

TEST_CASE("Fourier-slice relation on random directions") {
    GridSpec grid(2, 8.0, 256);
    Field F(grid, Side::space);
    for (int i = 0; i < 256; ++i)
        for (int j = 0; j < 256; ++j) {
            const double x = grid.coord(0, i), y = grid.coord(1, j);
            F.at(i, j) = std::exp(-0.5 * x * x - 0.25 * y * y);
        }
    auto fhat = [](double u, double v) {
        return 2.0 * pi * std::sqrt(2.0) * std::exp(-0.5 * u * u - v * v);
    };
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> unif(0.0, pi);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const double th = unif(rng);
        Frame fr = Frame::from_direction(2, {std::cos(th), std::sin(th), 0.0});
        Field R = kplane_transform(F, fr, 1);
        Field Rh = fourier_forward(R);
        const double peak = fhat(0.0, 0.0);
        for (int i = 0; i < 256; ++i) {
            const double s = Rh.grid.freq(0, i);
            if (std::abs(s) > 5.0) continue;
            const double expect = fhat(s * fr.omega[0], s * fr.omega[1]);
            worst = std::max(worst, std::abs(Rh.at(i).real() - expect) / peak);
            worst = std::max(worst, std::abs(Rh.at(i).imag()) / peak);
        }
    }
    CHECK(worst < 1e-5);
}

TEST_CASE("kplane transform is linear") {
    GridSpec grid(2, 8.0, 64);
    Field A(grid, Side::space), B(grid, Side::space);
    for (int i = 0; i < 64; ++i)
        for (int j = 0; j < 64; ++j) {
            const double x = grid.coord(0, i), y = grid.coord(1, j);
            A.at(i, j) = std::exp(-(x * x + y * y)) * cplx{1.0, 0.5};
            B.at(i, j) = std::exp(-0.5 * (x * x + y * y)) * x;
        }
    Field C(grid, Side::space);
    const cplx ca{0.7, -0.2}, cb{1.3, 0.4};
    for (std::size_t i = 0; i < C.values.size(); ++i)
        C.values[i] = ca * A.values[i] + cb * B.values[i];
    Frame fr = Frame::from_direction(2, {std::cos(0.77), std::sin(0.77), 0.0});
    Field RA = kplane_transform(A, fr, 1, 0.0);
    Field RB = kplane_transform(B, fr, 1, 0.0);
    Field RC = kplane_transform(C, fr, 1, 0.0);
    double max_err = 0.0;
    for (int i = 0; i < 64; ++i)
        max_err = std::max(max_err,
                           std::abs(RC.at(i) - ca * RA.at(i) - cb * RB.at(i)));
    CHECK(max_err < 1e-12 * (1.0 + RC.max_abs()));
}

TEST_CASE("kplane truncation guard") {
    GridSpec grid(2, 3.0, 32);
    Field F(grid, Side::space);
    for (int i = 0; i < 32; ++i)
        for (int j = 0; j < 32; ++j) F.at(i, j) = 1.0;  // no decay
    CHECK_THROWS_AS(kplane_transform(F, Frame::from_direction(2, {1, 0, 0}), 1),
                    TruncationError);
}

TEST_CASE("Plancherel k-plane identity for a 2-D Gaussian") {
    GridSpec grid(2, 8.0, 128);
    Field F(grid, Side::space);
    for (int i = 0; i < 128; ++i)
        for (int j = 0; j < 128; ++j) {
            const double x = grid.coord(0, i), y = grid.coord(1, j);
            F.at(i, j) = std::exp(-0.5 * (x * x + y * y));
        }
    auto res = plancherel_kplane_check(F, 1, 64);
    // ||F||^2 = pi.
    CHECK(rel(res.lhs, pi) < 1e-8);
    CHECK(res.rel_err < 1e-4);

    Field Z(grid, Side::space);
    auto zres = plancherel_kplane_check(Z, 1, 8);
    CHECK(zres.lhs == 0.0);
    CHECK(zres.rhs == 0.0);
}

TEST_CASE("Klein-Gordon propagator: identity at t = 0, unitarity, two paths") {
    auto f = [](const Vec2& x) {
        return cplx{std::exp(-x[0] * x[0]), 0.0};
    };
    GridSpec grid(2, 8.0, 128);
    Field u = klein_gordon_multiplier_path(f, 1.3, grid);
    const int n = grid.points_per_axis;
    // t = 0 slice: index of t = 0 is n/2.
    double err0 = 0.0;
    for (int i = 0; i < n; ++i)
        err0 = std::max(err0, std::abs(u.at(i, n / 2) - f({grid.coord(0, i), 0.0})));
    CHECK(err0 < 1e-8);
    // Unitarity of each time slice.
    const double h = grid.spacing(0);
    double norm0 = 0.0;
    for (int i = 0; i < n; ++i) norm0 += std::norm(u.at(i, n / 2));
    for (int it = 0; it < n; ++it) {
        double nt = 0.0;
        for (int i = 0; i < n; ++i) nt += std::norm(u.at(i, it));
        CHECK(rel(nt * h, norm0 * h) < 1e-8);
    }
    // Extension path agreement on a narrower time window.
    Field v = klein_gordon_extension_path(f, 1.3, grid, 12.0);
    double max_diff = 0.0;
    for (int i = n / 4; i < 3 * n / 4; ++i)
        for (int it = n / 4; it < 3 * n / 4; ++it)
            max_diff = std::max(max_diff, std::abs(u.at(i, it) - v.at(i, it)));
    CHECK(max_diff < 1e-6);
}
