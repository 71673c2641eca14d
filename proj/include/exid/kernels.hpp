#pragma once
// Closed-form kernels of the bilinear identities, in every published
// equivalent form, plus their Grassmannian / spherical averages.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "fourier.hpp"
#include "geometry.hpp"
#include "quadrature.hpp"

namespace exid {

struct SingularKernelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SurfaceTag { sphere, hyperboloid, paraboloid };

struct KernelInput {
    SurfaceTag surface = SurfaceTag::sphere;
    Frame frame;
    Vec3 xi{0, 0, 0};
    Vec3 zeta{0, 0, 0};
    double radius = 1.0;  // sphere radius r
    double mass = 1.0;    // hyperboloid mass m
};

// ---------------------------------------------------------------------------
// Sphere kernel: K_{pi,S} = 2 / |xi_perp + zeta_perp|
// ---------------------------------------------------------------------------

inline double kernel_sphere(const KernelInput& in) {
    const Vec2 xp = in.frame.comp_perp(in.xi);
    const Vec2 zp = in.frame.comp_perp(in.zeta);
    const double s = norm2(add2(xp, zp));
    if (s < 1e-14) throw SingularKernelError("kernel_sphere: xi_perp = -zeta_perp");
    return 2.0 / s;
}

// Reflection of xi_perp across the line through xi_perp + zeta_perp, and its
// partner: xi~ + zeta~ = xi + zeta with radii preserved.
inline std::pair<Vec2, Vec2> sphere_tilde_points(const Vec2& xp, const Vec2& zp) {
    const Vec2 x = add2(xp, zp);
    const double ax = norm2(x);
    if (ax < 1e-14)
        throw SingularKernelError("sphere_tilde_points: xi_perp + zeta_perp = 0");
    const Vec2 xhat{x[0] / ax, x[1] / ax};
    const double c = dot2(xp, xhat);
    const Vec2 xt{2.0 * c * xhat[0] - xp[0], 2.0 * c * xhat[1] - xp[1]};
    const Vec2 zt = sub2(x, xt);
    return {xt, zt};
}

// Both the wedge form and the direct form of the sphere kernel; they agree
// up to rounding on non-tangent configurations.
inline std::pair<double, double> kernel_sphere_wedge_equivalence(const KernelInput& in) {
    const Vec2 xp = in.frame.comp_perp(in.xi);
    const Vec2 zp = in.frame.comp_perp(in.zeta);
    const auto [xt, zt] = sphere_tilde_points(xp, zp);
    const double rx2 = dot2(xp, xp), rz2 = dot2(zp, zp);
    const double dotxz = dot2(xp, zp);
    const double denom = rx2 * rz2 - dotxz * dotxz;
    const double direct = kernel_sphere(in);
    if (denom <= 0.0) {
        // Collinear perp components: the wedge form is a 0/0 limit equal to
        // the direct form.
        return {direct, direct};
    }
    const double wedge =
        std::sqrt(norm2(sub2(xp, xt)) * norm2(sub2(zp, zt)) / denom);
    return {wedge, direct};
}

// ---------------------------------------------------------------------------
// Hyperboloid kernel
// ---------------------------------------------------------------------------

// phi_m for the full point xi in R^d.
inline double phi_full(double m, const Vec3& xi, int d) {
    double s = m * m;
    for (int a = 0; a < d; ++a) s += xi[a] * xi[a];
    return std::sqrt(s);
}

// Compact form: 2 (phi(xi)+phi(zeta)) / ((phi(xi)+phi(zeta))^2 - ((xi+zeta).w)^2).
inline double kernel_hyperboloid(const KernelInput& in) {
    const int d = in.frame.dim;
    const double pxi = phi_full(in.mass, in.xi, d);
    const double pze = phi_full(in.mass, in.zeta, d);
    double sw = 0.0;
    for (int a = 0; a < d; ++a) sw += (in.xi[a] + in.zeta[a]) * in.frame.omega[a];
    const double s = pxi + pze;
    return 2.0 * s / (s * s - sw * sw);
}

struct HyperboloidKernelForms {
    double reflected;
    double compact;
    double angle;
};

// Reflected-point, compact, and hyperbolic-angle forms of K_{omega,H}.
// Decomposing along omega: xi = xi^pi + xi^w w, masses m^pi = sqrt(m^2+|xi^pi|^2),
// rapidity gam = asinh(xi^w / m^pi); P = (xi^w + zeta^w, phi + phi), and the
// tilde abscissas are m^pi sinh(2 gam_P - gam).
inline HyperboloidKernelForms kernel_hyperboloid_forms(const KernelInput& in) {
    const int d = in.frame.dim;
    const double m = in.mass;
    const double xw = [&] {
        double s = 0.0;
        for (int a = 0; a < d; ++a) s += in.xi[a] * in.frame.omega[a];
        return s;
    }();
    const double zw = [&] {
        double s = 0.0;
        for (int a = 0; a < d; ++a) s += in.zeta[a] * in.frame.omega[a];
        return s;
    }();
    double xp2 = 0.0, zp2 = 0.0;
    for (int a = 0; a < d; ++a) {
        const double xc = in.xi[a] - xw * in.frame.omega[a];
        const double zc = in.zeta[a] - zw * in.frame.omega[a];
        xp2 += xc * xc;
        zp2 += zc * zc;
    }
    const double mx = std::sqrt(m * m + xp2), mz = std::sqrt(m * m + zp2);
    const double px = phi_full(m, in.xi, d), pz = phi_full(m, in.zeta, d);
    const double gx = std::asinh(xw / mx), gz = std::asinh(zw / mz);
    const double gP = lorentz_gamma({xw + zw, px + pz});

    HyperboloidKernelForms out{};
    out.compact = kernel_hyperboloid(in);

    // Reflected form.
    const double xt = mx * std::sinh(2.0 * gP - gx);
    const double zt = mz * std::sinh(2.0 * gP - gz);
    const double den = std::abs(xw * pz - zw * px);
    if (den > 1e-12 * (std::abs(xw * pz) + std::abs(zw * px) + 1e-30)) {
        out.reflected =
            std::sqrt(std::abs(xw - xt)) * std::sqrt(std::abs(zw - zt)) / den;
        out.angle = 2.0 * std::cosh(gP) *
                    std::sqrt(mx * mz * std::abs(std::sinh(gx - gP) * std::sinh(gz - gP))) /
                    (mx * mz * std::abs(std::sinh(gx - gz)));
    } else {
        // Removable singularity: resolve in favor of the compact form.
        out.reflected = out.compact;
        out.angle = out.compact;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Averaged kernels
// ---------------------------------------------------------------------------

// Fibonacci-spiral direction set on the unit sphere (deterministic).
inline std::vector<Vec3> spiral_directions(int count) {
    std::vector<Vec3> dirs;
    dirs.reserve(count);
    const double ga = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
        const double z = 1.0 - (2.0 * i + 1.0) / count;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double th = ga * i;
        dirs.push_back({r * std::cos(th), r * std::sin(th), z});
    }
    return dirs;
}

struct AveragedKernel {
    double numeric;
    double analytic;
};

// Average of K_{pi,S} over lines pi in G_{1,3}, normalized by 1/|G_{1,2}|;
// analytic value 2 pi / |xi + zeta| (n = 3 only).
inline AveragedKernel kernel_sphere_averaged(const Vec3& xi, const Vec3& zeta,
                                             int samples) {
    const Vec3 x{xi[0] + zeta[0], xi[1] + zeta[1], xi[2] + zeta[2]};
    const double ax = norm3(x);
    if (ax < 1e-14) throw SingularKernelError("kernel_sphere_averaged: xi = -zeta");
    AveragedKernel out{};
    out.analytic = 2.0 * std::numbers::pi / ax;
    // G_{1,3} integral as half the full-sphere direction integral; each
    // direction w spans the line pi, and the integrand is 2/|proj_{pi-perp}(x)|.
    // The integrand blows up like 1/sin(theta) at w parallel to +-x, so the
    // quadrature is a product rule in a frame whose pole is that axis: the
    // sin(theta) surface-measure factor then cancels the singularity exactly
    // (equal-weight scattered sampling stalls at ~5e-3 here).
    const int kpol = std::max(4, static_cast<int>(std::lround(std::sqrt(
                                  static_cast<double>(samples)))));
    const int maz = kpol;
    const Frame fx = Frame::from_direction(3, {x[0] / ax, x[1] / ax, x[2] / ax});
    const auto polar = gauss_legendre(kpol, 0.0, std::numbers::pi);
    double acc = 0.0;
    for (int p = 0; p < kpol; ++p) {
        const double th = polar.nodes[p];
        const double st = std::sin(th), ct = std::cos(th);
        for (int j = 0; j < maz; ++j) {
            const double ph = 2.0 * std::numbers::pi * j / maz;
            Vec3 w;
            for (int a = 0; a < 3; ++a)
                w[a] = st * (std::cos(ph) * fx.basis_perp[0][a] +
                             std::sin(ph) * fx.basis_perp[1][a]) +
                       ct * fx.omega[a];
            const double c = dot3(x, w);
            const double perp = std::sqrt(std::max(ax * ax - c * c, 1e-28));
            acc += polar.weights[p] * (2.0 * std::numbers::pi / maz) * st * 2.0 / perp;
        }
    }
    // G_{1,3} measure = half the full-sphere measure; prefactor 1/|G_{1,2}|.
    out.numeric = 0.5 * acc / grassmannian_volume(1, 2);
    return out;
}

// (1/2) INT_{S^{d-1}} K_{omega,H}(xi,zeta) dsigma(omega) by equi-angular
// sampling (d = 2, unnormalized circle measure).
inline double kernel_hyperboloid_averaged(const Vec3& xi, const Vec3& zeta, double m,
                                          int samples) {
    double acc = 0.0;
    for (int j = 0; j < samples; ++j) {
        const double th = 2.0 * std::numbers::pi * j / samples;
        KernelInput in;
        in.surface = SurfaceTag::hyperboloid;
        in.frame = Frame::from_direction(2, {std::cos(th), std::sin(th), 0.0});
        // Keep the sampling direction itself (from_direction canonicalizes
        // the hemisphere; the kernel depends on ((xi+zeta).w)^2 so the sign
        // is immaterial).
        in.xi = xi;
        in.zeta = zeta;
        in.mass = m;
        acc += kernel_hyperboloid(in);
    }
    return 0.5 * acc * (2.0 * std::numbers::pi / samples);
}

// INT_{S^{d-1}} |v . w| dsigma(w) = 2 |v| pi^{(d-1)/2} / Gamma((d+1)/2).
inline double angular_average_abs_inner(const double* v, int d) {
    if (d < 2) throw std::domain_error("angular_average_abs_inner: d >= 2");
    double a2 = 0.0;
    for (int i = 0; i < d; ++i) a2 += v[i] * v[i];
    const double a = std::sqrt(a2);
    return 2.0 * a * std::pow(std::numbers::pi, 0.5 * (d - 1)) /
           std::tgamma(0.5 * (d + 1));
}

}  // namespace exid
