#pragma once
// Reflected-point constructions on circles and hyperbolas, 1+1 Lorentz
// boosts, and orthonormal frames (direction + complement) used by the
// bilinear kernels.

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace exid {

struct EmptyIntersectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateContinuumError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonTimelikeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WrongSheetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Vec2 = std::array<double, 2>;
using Vec3 = std::array<double, 3>;

inline double dot2(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }
inline double norm2(const Vec2& a) { return std::hypot(a[0], a[1]); }
inline Vec2 add2(const Vec2& a, const Vec2& b) { return {a[0] + b[0], a[1] + b[1]}; }
inline Vec2 sub2(const Vec2& a, const Vec2& b) { return {a[0] - b[0], a[1] - b[1]}; }

inline double dot3(const Vec3& a, const Vec3& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline double norm3(const Vec3& a) { return std::sqrt(dot3(a, a)); }

// Direction omega in the closed upper hemisphere plus an orthonormal basis of
// its orthogonal complement. decompose/recompose are exact up to rounding.
struct Frame {
    int dim = 3;
    Vec3 omega{0.0, 0.0, 1.0};
    std::array<Vec3, 2> basis_perp{Vec3{1, 0, 0}, Vec3{0, 1, 0}};

    static Frame from_direction(int dim, Vec3 w) {
        Frame fr;
        fr.dim = dim;
        double n = 0.0;
        for (int a = 0; a < dim; ++a) n += w[a] * w[a];
        n = std::sqrt(n);
        if (n == 0.0) throw std::invalid_argument("Frame: zero direction");
        for (int a = 0; a < dim; ++a) w[a] /= n;
        for (int a = dim; a < 3; ++a) w[a] = 0.0;
        // Canonicalize to the upper hemisphere: last nonzero coordinate > 0.
        for (int a = dim - 1; a >= 0; --a) {
            if (std::abs(w[a]) > 1e-14) {
                if (w[a] < 0.0)
                    for (int b = 0; b < dim; ++b) w[b] = -w[b];
                break;
            }
        }
        fr.omega = w;
        if (dim == 2) {
            fr.basis_perp[0] = {-w[1], w[0], 0.0};
            fr.basis_perp[1] = {0.0, 0.0, 0.0};
        } else {
            // Householder-style completion: start from the axis least aligned
            // with omega, Gram-Schmidt.
            int least = 0;
            for (int a = 1; a < 3; ++a)
                if (std::abs(w[a]) < std::abs(w[least])) least = a;
            Vec3 u{0, 0, 0};
            u[least] = 1.0;
            const double c = dot3(u, w);
            for (int a = 0; a < 3; ++a) u[a] -= c * w[a];
            const double un = norm3(u);
            for (int a = 0; a < 3; ++a) u[a] /= un;
            Vec3 v{w[1] * u[2] - w[2] * u[1], w[2] * u[0] - w[0] * u[2],
                   w[0] * u[1] - w[1] * u[0]};
            fr.basis_perp[0] = u;
            fr.basis_perp[1] = v;
        }
        return fr;
    }

    // Component along omega.
    double comp_omega(const Vec3& x) const { return dot3(x, omega); }
    // Components along the perp basis (dim-1 of them are meaningful).
    Vec2 comp_perp(const Vec3& x) const {
        return {dot3(x, basis_perp[0]), dim == 3 ? dot3(x, basis_perp[1]) : 0.0};
    }
    Vec3 recompose(double xw, const Vec2& xp) const {
        Vec3 r;
        for (int a = 0; a < 3; ++a)
            r[a] = xw * omega[a] + xp[0] * basis_perp[0][a] + xp[1] * basis_perp[1][a];
        return r;
    }
};

struct CirclePair {
    double r1, r2;  // 0 < r1 <= r2
    CirclePair(double a, double b) : r1(std::min(a, b)), r2(std::max(a, b)) {
        if (r1 <= 0.0) throw std::invalid_argument("CirclePair: radii must be positive");
    }
};

struct HyperbolaPair {
    double m1, m2;  // 0 < m1 <= m2
    HyperbolaPair(double a, double b) : m1(std::min(a, b)), m2(std::max(a, b)) {
        if (m1 <= 0.0) throw std::invalid_argument("HyperbolaPair: masses must be positive");
    }
};

struct ReflectedPoints {
    Vec2 p1_plus, p1_minus, p2_plus, p2_minus;
    bool tangent = false;
    // Hyperbola-case aliases (q naming).
    Vec2& q1_plus() { return p1_plus; }
    Vec2& q1_minus() { return p1_minus; }
    Vec2& q2_plus() { return p2_plus; }
    Vec2& q2_minus() { return p2_minus; }
    const Vec2& q1_plus() const { return p1_plus; }
    const Vec2& q1_minus() const { return p1_minus; }
    const Vec2& q2_plus() const { return p2_plus; }
    const Vec2& q2_minus() const { return p2_minus; }
};

inline constexpr double kTangentRelTol = 1e-9;

// Intersection points of |P| = r2 with |x - P| = r1, labeled so that
// p2_plus . v_x >= 0 where v_x is the counter-clockwise quarter-turn of x/|x|;
// p1_plus := x - p2_minus and p1_minus := x - p2_plus.
inline ReflectedPoints circle_points(const CirclePair& pair, const Vec2& x) {
    const double r1 = pair.r1, r2 = pair.r2;
    const double ax = norm2(x);
    if (ax == 0.0) {
        if (r1 == r2)
            throw DegenerateContinuumError("circle_points: x = 0 with equal radii");
        throw EmptyIntersectionError("circle_points: x = 0 with distinct radii");
    }
    const double lo = r2 - r1, hi = r1 + r2;
    const double scale = hi;
    if (ax < lo - kTangentRelTol * scale || ax > hi + kTangentRelTol * scale)
        throw EmptyIntersectionError("circle_points: |x| outside [r2-r1, r1+r2]");
    const bool tangent =
        (ax <= lo + kTangentRelTol * scale) || (ax >= hi - kTangentRelTol * scale);
    const Vec2 xhat{x[0] / ax, x[1] / ax};
    const Vec2 vx{-xhat[1], xhat[0]};
    const double p = (ax * ax + r2 * r2 - r1 * r1) / (2.0 * ax);
    const double q2 = std::max(0.0, r2 * r2 - p * p);
    const double q = std::sqrt(q2);
    ReflectedPoints out;
    out.tangent = tangent;
    out.p2_plus = {p * xhat[0] + q * vx[0], p * xhat[1] + q * vx[1]};
    out.p2_minus = {p * xhat[0] - q * vx[0], p * xhat[1] - q * vx[1]};
    out.p1_plus = sub2(x, out.p2_minus);
    out.p1_minus = sub2(x, out.p2_plus);
    return out;
}

// Rapidity of the boost taking the timelike point (xi, tau) to the tau-axis.
inline double lorentz_gamma(const Vec2& p) {
    const double xi = p[0], tau = p[1];
    if (!(tau > std::abs(xi))) throw NonTimelikeError("lorentz_gamma: need tau > |xi|");
    return std::log(std::sqrt((tau + xi) / (tau - xi)));
}

inline Vec2 lorentz_boost(double gamma, const Vec2& p) {
    const double ch = std::cosh(gamma), sh = std::sinh(gamma);
    return {ch * p[0] - sh * p[1], -sh * p[0] + ch * p[1]};
}

inline double phi_m(double m, double u) { return std::sqrt(m * m + u * u); }

// Intersection of the upper hyperbola x2 = phi_{m2}(x1) with its translate by
// x of the mass-m1 hyperbola, via boost-to-axis / solve / boost-back.
// Labels: q1_plus = (+w1, phi_{m1}) and q2_plus = (+w1, phi_{m2}) on the axis,
// so that q1_plus + q2_minus = q1_minus + q2_plus = x and
// (q2_plus - x) . e1 >= 0 after boosting back.
inline ReflectedPoints hyperbola_points(const HyperbolaPair& pair, const Vec2& x) {
    const double m1 = pair.m1, m2 = pair.m2;
    if (!(x[1] > 0.0)) throw WrongSheetError("hyperbola_points: need x2 > 0");
    const double q = x[1] * x[1] - x[0] * x[0];
    if (q <= 0.0) throw NonTimelikeError("hyperbola_points: x must be timelike");
    const double v = std::sqrt(q);
    const double thr = m1 + m2;
    if (v < thr * (1.0 - kTangentRelTol))
        throw EmptyIntersectionError("hyperbola_points: sqrt(x2^2-x1^2) < m1+m2");
    const bool tangent = v <= thr * (1.0 + kTangentRelTol);
    const double gamma = lorentz_gamma(x);
    const double disc = std::max(
        0.0, q * q - 2.0 * q * (m1 * m1 + m2 * m2) +
                 (m1 * m1 - m2 * m2) * (m1 * m1 - m2 * m2));
    const double w1 = std::sqrt(disc) / (2.0 * v);
    // x boosted to the axis is (0, v); on-axis points, then boost back by -gamma.
    const Vec2 q1p_axis{w1, phi_m(m1, w1)}, q1m_axis{-w1, phi_m(m1, w1)};
    const Vec2 q2p_axis{w1, phi_m(m2, w1)}, q2m_axis{-w1, phi_m(m2, w1)};
    ReflectedPoints out;
    out.tangent = tangent;
    out.q1_plus() = lorentz_boost(-gamma, q1p_axis);
    out.q1_minus() = lorentz_boost(-gamma, q1m_axis);
    out.q2_plus() = lorentz_boost(-gamma, q2p_axis);
    out.q2_minus() = lorentz_boost(-gamma, q2m_axis);
    return out;
}

}  // namespace exid
