#pragma once
// Closed-form convolutions of weighted arc measures on circles and of
// Lorentz-invariant measures on hyperbolas, plus a mollified brute-force
// oracle used to validate them independently.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "geometry.hpp"
#include "quadrature.hpp"

namespace exid {

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Density2D = std::function<std::complex<double>(const Vec2&)>;

// Arc measure of the radius-r circle parametrized over S^1:
// INT g dsigma_r = INT_{S^1} g(r w) dsigma(w), total mass 2 pi.
struct CircleDensity {
    double radius;
    Density2D density;
};

// Lorentz-invariant measure on the upper mass-m hyperbola: in the
// hyperbolic-angle parametrization (m sinh g, m cosh g) the measure is dg.
struct HyperbolaDensity {
    double mass;
    Density2D density;
};

enum class ConvStatus { finite, empty_support, tangent_divergent };

struct ConvValue {
    std::complex<double> value{0.0, 0.0};
    ConvStatus status = ConvStatus::finite;
};

inline constexpr double kSupportGuardRelTol = 1e-6;

// (g1 dsigma_{r1} * g2 dsigma_{r2})(x) in closed form:
// [2 g1(P1+) g2(P2-) + 2 g1(P1-) g2(P2+)] / sqrt(-(|x|^2-(r2+r1)^2)(|x|^2-(r2-r1)^2)).
inline ConvValue circle_conv_closed(const CircleDensity& a, const CircleDensity& b,
                                    const Vec2& x) {
    const CircleDensity& d1 = (a.radius <= b.radius) ? a : b;
    const CircleDensity& d2 = (a.radius <= b.radius) ? b : a;
    const double r1 = d1.radius, r2 = d2.radius;
    const double ax = norm2(x);
    if (ax == 0.0 && r1 == r2)
        throw DegenerateContinuumError("circle_conv_closed: x = 0 with equal radii");
    const double lo = r2 - r1, hi = r1 + r2;
    if (ax < lo * (1.0 - kSupportGuardRelTol) - kSupportGuardRelTol ||
        ax > hi * (1.0 + kSupportGuardRelTol))
        return {std::complex<double>{0.0, 0.0}, ConvStatus::empty_support};
    if (ax < lo + kSupportGuardRelTol * hi || ax > hi * (1.0 - kSupportGuardRelTol))
        return {std::complex<double>{0.0, 0.0}, ConvStatus::tangent_divergent};
    const ReflectedPoints pts = circle_points(CirclePair(r1, r2), x);
    const double den = std::sqrt(-((ax * ax - hi * hi) * (ax * ax - lo * lo)));
    const std::complex<double> num =
        2.0 * d1.density(pts.p1_plus) * d2.density(pts.p2_minus) +
        2.0 * d1.density(pts.p1_minus) * d2.density(pts.p2_plus);
    return {num / den, ConvStatus::finite};
}

// (g1 dsigma_{H_{m1}} * g2 dsigma_{H_{m2}})(x) in closed form:
// [2 g1(Q1+) g2(Q2-) + 2 g1(Q1-) g2(Q2+)] /
//   sqrt((x2^2-x1^2)^2 - 2(x2^2-x1^2)(m1^2+m2^2) + (m1^2-m2^2)^2).
inline ConvValue hyperbola_conv_closed(const HyperbolaDensity& a,
                                       const HyperbolaDensity& b, const Vec2& x) {
    const HyperbolaDensity& d1 = (a.mass <= b.mass) ? a : b;
    const HyperbolaDensity& d2 = (a.mass <= b.mass) ? b : a;
    const double m1 = d1.mass, m2 = d2.mass;
    if (!(x[1] > 0.0)) throw WrongSheetError("hyperbola_conv_closed: need x2 > 0");
    const double q = x[1] * x[1] - x[0] * x[0];
    const double thr = (m1 + m2) * (m1 + m2);
    if (q < thr * (1.0 - kSupportGuardRelTol))
        return {std::complex<double>{0.0, 0.0}, ConvStatus::empty_support};
    if (q < thr * (1.0 + kSupportGuardRelTol))
        return {std::complex<double>{0.0, 0.0}, ConvStatus::tangent_divergent};
    const ReflectedPoints pts = hyperbola_points(HyperbolaPair(m1, m2), x);
    const double den = std::sqrt(q * q - 2.0 * q * (m1 * m1 + m2 * m2) +
                                 (m1 * m1 - m2 * m2) * (m1 * m1 - m2 * m2));
    const std::complex<double> num =
        2.0 * d1.density(pts.q1_plus()) * d2.density(pts.q2_minus()) +
        2.0 * d1.density(pts.q1_minus()) * d2.density(pts.q2_plus());
    return {num / den, ConvStatus::finite};
}

namespace detail {
// Unit-mass isotropic 2-D Gaussian.
inline double gauss2(const Vec2& v, double sigma) {
    const double s2 = sigma * sigma;
    return std::exp(-0.5 * (v[0] * v[0] + v[1] * v[1]) / s2) /
           (2.0 * std::numbers::pi * s2);
}
}  // namespace detail

// Brute-force mollified convolution for circles:
// INT INT g1(P) g2(Q) delta_sigma(x - P - Q) dmu1(P) dmu2(Q)
// over the product of two angular trapezoid rules.
inline std::complex<double> circle_conv_oracle(const CircleDensity& a,
                                               const CircleDensity& b, const Vec2& x,
                                               double sigma, int nodes = 2048) {
    const QuadratureRule1D rule = periodic_trapezoid(nodes);
    std::complex<double> acc{0.0, 0.0};
    std::vector<Vec2> pa(nodes), pb(nodes);
    std::vector<std::complex<double>> ga(nodes), gb(nodes);
    for (int i = 0; i < nodes; ++i) {
        const double t = rule.nodes[i];
        pa[i] = {a.radius * std::cos(t), a.radius * std::sin(t)};
        pb[i] = {b.radius * std::cos(t), b.radius * std::sin(t)};
        ga[i] = a.density(pa[i]);
        gb[i] = b.density(pb[i]);
    }
    const double w = rule.weights[0];
    // Only pairs with |x - P - Q| < 8 sigma contribute beyond rounding.
    const double cut = 8.0 * sigma;
    for (int i = 0; i < nodes; ++i) {
        const Vec2 rem{x[0] - pa[i][0], x[1] - pa[i][1]};
        for (int j = 0; j < nodes; ++j) {
            const Vec2 dv{rem[0] - pb[j][0], rem[1] - pb[j][1]};
            if (std::abs(dv[0]) > cut || std::abs(dv[1]) > cut) continue;
            acc += ga[i] * gb[j] * detail::gauss2(dv, sigma);
        }
    }
    return acc * (w * w);
}

namespace detail {
// Mollified line integral over the second hyperbola against the Gaussian
// centered at `target`, with arc-length resolution ~ sigma/3 around the
// nearest-abscissa point. The measure is d(gamma).
inline std::complex<double> mollified_row(const HyperbolaDensity& b, const Vec2& target,
                                          double sigma, double Gamma) {
    const double cut = 8.0 * sigma;
    if (target[1] < b.mass - cut) return {0.0, 0.0};
    const double gc = std::asinh(target[0] / b.mass);
    const double speed = b.mass * std::sqrt(std::cosh(2.0 * gc));
    const double step = sigma / (3.0 * speed);
    const double half = 1.5 * cut / speed;  // covers |arc offset| <= 12 sigma
    std::complex<double> row{0.0, 0.0};
    const int nj = static_cast<int>(std::ceil(2.0 * half / step));
    for (int j = 0; j < nj; ++j) {
        const double g2 = gc - half + (j + 0.5) * (2.0 * half / nj);
        if (g2 < -Gamma || g2 > Gamma) continue;
        const Vec2 Q{b.mass * std::sinh(g2), b.mass * std::cosh(g2)};
        const Vec2 dv{target[0] - Q[0], target[1] - Q[1]};
        if (std::abs(dv[0]) > cut || std::abs(dv[1]) > cut) continue;
        row += b.density(Q) * detail::gauss2(dv, sigma);
    }
    return row * (2.0 * half / nj);
}
}  // namespace detail

// Brute-force mollified convolution for hyperbolas, parametrized by the
// hyperbolic angle on [-Gamma, Gamma]. A coarse scan locates the angle
// regions where x - P lands within reach of the second hyperbola; those
// regions are integrated with arc-length steps fine relative to sigma.
inline std::complex<double> hyperbola_conv_oracle(const HyperbolaDensity& a,
                                                  const HyperbolaDensity& b,
                                                  const Vec2& x, double sigma,
                                                  double Gamma = 8.0) {
    const double cut = 8.0 * sigma;
    // Coarse scan: vertical distance from x - P to the second hyperbola.
    const int ncoarse = 4096;
    const double hc = 2.0 * Gamma / ncoarse;
    std::vector<std::pair<double, double>> regions;  // flagged [lo, hi] angle cells
    for (int i = 0; i < ncoarse; ++i) {
        const double g1 = -Gamma + (i + 0.5) * hc;
        const Vec2 P{a.mass * std::sinh(g1), a.mass * std::cosh(g1)};
        const Vec2 rem{x[0] - P[0], x[1] - P[1]};
        const double vert = rem[1] - phi_m(b.mass, rem[0]);
        // |vert| bounds the distance from below only up to the local slope;
        // flag with a margin covering one coarse cell of arc motion.
        const double speed1 = a.mass * std::sqrt(std::cosh(2.0 * g1));
        const double margin = 2.0 * cut + 3.0 * speed1 * hc;
        if (std::abs(vert) <= margin)
            regions.emplace_back(g1 - 0.5 * hc, g1 + 0.5 * hc);
    }
    // Merge adjacent flagged cells.
    std::vector<std::pair<double, double>> merged;
    for (const auto& r : regions) {
        if (!merged.empty() && r.first <= merged.back().second + 0.5 * hc)
            merged.back().second = r.second;
        else
            merged.push_back(r);
    }
    std::complex<double> acc{0.0, 0.0};
    for (const auto& r : merged) {
        // Fine pass: arc step <= sigma/3 within the region.
        double g1 = r.first;
        while (g1 < r.second) {
            const double speed1 = a.mass * std::sqrt(std::cosh(2.0 * g1));
            const double dg = std::min(sigma / (3.0 * speed1), r.second - g1);
            const double gm = g1 + 0.5 * dg;
            const Vec2 P{a.mass * std::sinh(gm), a.mass * std::cosh(gm)};
            const Vec2 rem{x[0] - P[0], x[1] - P[1]};
            acc += a.density(P) * detail::mollified_row(b, rem, sigma, Gamma) * dg;
            g1 += dg;
        }
    }
    return acc;
}

enum class SurfaceKind { circle, hyperbola, paraboloid };

// Unified front end over the two oracle paths (periodic trapezoid for
// circles, truncated angle integration for hyperbolas).
inline std::complex<double> conv_oracle(SurfaceKind kind, const Density2D& g1,
                                        const Density2D& g2, double p1, double p2,
                                        const Vec2& x, double mollifier_width) {
    if (mollifier_width <= 0.0)
        throw std::invalid_argument("conv_oracle: mollifier_width > 0 required");
    if (kind == SurfaceKind::circle)
        return circle_conv_oracle({p1, g1}, {p2, g2}, x, mollifier_width);
    if (kind == SurfaceKind::hyperbola)
        return hyperbola_conv_oracle({p1, g1}, {p2, g2}, x, mollifier_width);
    throw std::domain_error("conv_oracle: unsupported surface kind");
}

// Convergence-audited oracle: doubles the hyperbola angle truncation and
// demands stability to 1e-3 relative.
inline std::complex<double> hyperbola_conv_oracle_checked(const HyperbolaDensity& a,
                                                          const HyperbolaDensity& b,
                                                          const Vec2& x, double sigma,
                                                          double Gamma = 8.0) {
    const std::complex<double> v1 = hyperbola_conv_oracle(a, b, x, sigma, Gamma);
    const std::complex<double> v2 = hyperbola_conv_oracle(a, b, x, sigma, 2.0 * Gamma);
    if (std::abs(v2 - v1) > 1e-3 * std::max(std::abs(v2), 1e-14))
        throw ConvergenceError("hyperbola_conv_oracle: truncation not converged");
    return v2;
}

}  // namespace exid
