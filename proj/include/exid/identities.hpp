#pragma once
// End-to-end verification of the bilinear extension identities: the
// half-derivative line-transform norm of a product of two surface extensions
// against its closed-form kernel quadrature, for the sphere, the hyperboloid
// and the paraboloid, plus the associated sharp constants.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fourier.hpp"
#include "geometry.hpp"
#include "kernels.hpp"
#include "report.hpp"
#include "transforms.hpp"

namespace exid {

struct IdentitySettings {
    double refine = 1.0;        // 0.5 halves grid resolution and node counts
    double tolerance = 3e-2;    // end-to-end relative tolerance
    double guard_delta = 1e-3;  // kernel-singularity excision radius (sphere)
    std::uint64_t seed = 20260823;
};

namespace detail {

inline int scaled_even(int base, double refine) {
    int m = static_cast<int>(std::lround(base * refine));
    if (m < 8) m = 8;
    if (m & 1) ++m;
    return m;
}

inline int scaled_count(int base, double refine) {
    return std::max(4, static_cast<int>(std::lround(base * refine)));
}

// Ratio of the largest boundary sample to the largest field sample; reported
// as a truncation diagnostic on product fields whose tails leave the box.
inline double boundary_ratio(const Field& F) {
    const int n = F.grid.points_per_axis;
    const int dim = F.grid.dim;
    double bmax = 0.0;
    const double fmax = std::max(F.max_abs(), 1e-300);
    detail::for_each_index(dim, n, [&](int i0, int i1, int i2) {
        const bool edge = i0 == 0 || i0 == n - 1 || (dim > 1 && (i1 == 0 || i1 == n - 1)) ||
                          (dim > 2 && (i2 == 0 || i2 == n - 1));
        if (edge) bmax = std::max(bmax, std::abs(F.at(i0, i1, i2)));
    });
    return bmax / fmax;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Seeded density catalog
// ---------------------------------------------------------------------------

// Low-degree zonal mixture on the radius-r sphere: c0 + c1 P1 + c2 P2 in
// cos(theta), with coefficients drawn deterministically from the seed.
inline std::function<cplx(const Vec3&)> zonal_mixture(std::uint64_t seed,
                                                      double radius = 1.0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-0.5, 0.5);
    const double c0 = 1.0 + U(rng);
    const cplx c1{U(rng), 0.5 * U(rng)};
    const cplx c2{U(rng), 0.5 * U(rng)};
    return [c0, c1, c2, radius](const Vec3& xi) {
        const double c = xi[2] / radius;
        return c0 + c1 * c + c2 * (1.5 * c * c - 0.5);
    };
}

inline std::function<cplx(const Vec2&)> gaussian_rd(double alpha) {
    return [alpha](const Vec2& xi) {
        return cplx{std::exp(-alpha * (xi[0] * xi[0] + xi[1] * xi[1])), 0.0};
    };
}

// Polynomially modulated Gaussian (breaks the rotational symmetry).
inline std::function<cplx(const Vec2&)> hermite_gaussian_rd(double alpha, double beta) {
    return [alpha, beta](const Vec2& xi) {
        return cplx{(1.0 + beta * xi[0]) * std::exp(-alpha * (xi[0] * xi[0] + xi[1] * xi[1])),
                    0.0};
    };
}

// ---------------------------------------------------------------------------
// Antipodal symmetrization h -> sqrt((h(xi) + h(-xi)) / 2)
// ---------------------------------------------------------------------------

// Preserves the integral of h when applied to a nonnegative weight: the
// square of the result is the even part of h.
inline std::function<double(const Vec3&)> antipodal_sharp(
    std::function<double(const Vec3&)> h) {
    return [h = std::move(h)](const Vec3& xi) {
        const double a = h(xi);
        const double b = h({-xi[0], -xi[1], -xi[2]});
        if (a < 0.0 || b < 0.0)
            throw std::domain_error("antipodal_sharp: h must be nonnegative");
        return std::sqrt(0.5 * (a + b));
    };
}

// ---------------------------------------------------------------------------
// Power-law tail extrapolation for time-slice profiles
// ---------------------------------------------------------------------------

// Least-squares fit I(t) ~ a t^-p + b t^-(p+2) over samples with t in
// [t_lo, inf); returns the integral of the fit over (T, inf).
inline double power_tail_integral(const std::vector<std::pair<double, double>>& samples,
                                  double t_lo, double T, double p) {
    double m11 = 0, m12 = 0, m22 = 0, r1 = 0, r2 = 0;
    for (const auto& [t, I] : samples) {
        if (t < t_lo) continue;
        const double u1 = std::pow(t, -p), u2 = std::pow(t, -(p + 2.0));
        m11 += u1 * u1;
        m12 += u1 * u2;
        m22 += u2 * u2;
        r1 += u1 * I;
        r2 += u2 * I;
    }
    const double det = m11 * m22 - m12 * m12;
    if (!(det > 0.0)) return 0.0;
    const double a = (r1 * m22 - r2 * m12) / det;
    const double b = (m11 * r2 - m12 * r1) / det;
    return a / ((p - 1.0) * std::pow(T, p - 1.0)) +
           b / ((p + 1.0) * std::pow(T, p + 1.0));
}

// ---------------------------------------------------------------------------
// Time-sliced line-transform norms (surfaces over (x, t), d = 2)
// ---------------------------------------------------------------------------

enum class SDeriv { half, full };

struct TimeSlicedLhs {
    double box = 0.0;   // integral over the time range of the grid
    double tail = 0.0;  // fitted contribution of |t| beyond the box
    std::vector<std::pair<double, double>> profile;  // (|t|, slice norm)
    double total() const { return box + tail; }
};

// For a 3-D product field P(x0, x1, t): per time slice, the line transform
// along the direction orthogonal to omega (in the x-plane), then the
// s-derivative norm of the given order, integrated in t.  The slice-norm
// profile decays polynomially, so the out-of-box remainder is obtained by a
// two-term power-law fit on the outer part of the profile.
inline TimeSlicedLhs time_sliced_radon_lhs(const Field& P, const Frame& fr2, SDeriv o,
                                           double tail_p, double tail_window = 0.6) {
    if (P.grid.dim != 3) throw std::domain_error("time_sliced_radon_lhs: dim 3 expected");
    const GridSpec& g = P.grid;
    const int n = g.points_per_axis;
    GridSpec sg(2, {g.half_width[0], g.half_width[1], 1.0}, n);
    TimeSlicedLhs out;
    const double dt = g.spacing(2);
    Field slice(sg, Side::space);
    for (int it = 0; it < n; ++it) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) slice.at(i, j) = P.at(i, j, it);
        Field T = kplane_transform(slice, fr2, 1, 0.0);
        const double I =
            (o == SDeriv::half) ? half_derivative_l2sq_1d(T) : derivative_l2sq_1d(T);
        out.box += I * dt;
        out.profile.emplace_back(std::abs(g.coord(2, it)), I);
    }
    const double L = g.half_width[2];
    out.tail = 2.0 * power_tail_integral(out.profile, tail_window * L, L, tail_p);
    return out;
}

// ---------------------------------------------------------------------------
// Sphere identity (n = 3)
// ---------------------------------------------------------------------------

// Kernel-quadrature side of the sphere identity, in all equivalent
// arrangements of the integrand on a shared node set.
struct SphereRhsParts {
    double fourwave = 0.0;       // C_S sum K Re[ g1 g2~* g2 g1~* ]
    double fourwave_imag = 0.0;  // imaginary part (vanishes up to rounding)
    double pointwise = 0.0;      // same sum via |.|^2 algebra per node pair
    double modulus = 0.0;        // C_S sum K |g1(xi)|^2 |g2(zeta)|^2
    double correction_I = 0.0;   // (C_S/2) sum K |g1 g2 - g2~ g1~|^2 >= 0
    double excised = 0.0;        // |weight| mass dropped near the singular set
};

inline SphereRhsParts sphere_rhs_parts(const std::function<cplx(const Vec3&)>& g1,
                                       const std::function<cplx(const Vec3&)>& g2,
                                       double radius, const Frame& fr, int npolar,
                                       int nazimuth, double delta) {
    SphereDensity unit{radius, 3, [](const Vec3&) { return cplx{1.0, 0.0}; }, npolar,
                       nazimuth};
    const std::vector<SurfaceNode> nodes = sphere_nodes(unit);
    const std::size_t m = nodes.size();
    // Per-node precomputation.
    std::vector<double> w(m), xw(m);
    std::vector<Vec2> xp(m);
    std::vector<cplx> v1(m), v2(m);
    for (std::size_t i = 0; i < m; ++i) {
        w[i] = nodes[i].weight.real();
        xw[i] = fr.comp_omega(nodes[i].xi);
        xp[i] = fr.comp_perp(nodes[i].xi);
        v1[i] = g1(nodes[i].xi);
        v2[i] = g2(nodes[i].xi);
    }
    SphereRhsParts out;
    cplx fw{0.0, 0.0};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const Vec2 s = add2(xp[i], xp[j]);
            const double as = norm2(s);
            const double wij = w[i] * w[j];
            if (as < delta) {
                out.excised += std::abs(wij);
                continue;
            }
            const double K = 2.0 / as;
            const auto [xt, zt] = sphere_tilde_points(xp[i], xp[j]);
            const cplx b = g2(fr.recompose(xw[i], xt));
            const cplx c = g1(fr.recompose(xw[j], zt));
            const cplx a = v1[i], d = v2[j];
            const double wk = wij * K;
            fw += wk * (a * std::conj(b) * d * std::conj(c));
            const cplx ad = a * d, bc = b * c;
            out.pointwise +=
                wk * 0.5 * (std::norm(ad) + std::norm(bc) - std::norm(ad - bc));
            out.modulus += wk * std::norm(a) * std::norm(d);
            out.correction_I += wk * 0.5 * std::norm(ad - bc);
        }
    }
    const double CS = std::pow(2.0 * std::numbers::pi, 4);  // (2 pi)^{2(n-1)}, n = 3
    out.fourwave = CS * fw.real();
    out.fourwave_imag = CS * fw.imag();
    out.pointwise *= CS;
    out.modulus *= CS;
    out.correction_I *= 0.5 * CS;
    return out;
}

// ||(-Delta)^{1/4} T||^2 for a 2-D profile with a 1/|y| spatial tail, whose
// transform therefore diverges like c(theta)/|k| at the origin and carries an
// O(1) fraction of the norm below the frequency resolution of any affordable
// box.  The infrared model c^2 chi(k)/|k| (angular-mean c^2 fitted on the
// annulus [k1, k2], chi a smooth cutoff equal to 1 below k1 and 0 above k2)
// is summed on the same lattice and replaced by its continuum integral, so
// the singular part of the lattice-sum error cancels between data and model.
// Note: no zero-padding.  T is roughly even, so its periodic continuation is
// continuous, whereas padding a ~c/|y| profile with zeros cuts an O(c/L) edge
// jump whose ringing adds several percent of spurious spectral power.
// The cutoff must be smooth: a sharp indicator makes the result jump by ~1%
// as lattice shells enter or leave the model region.
inline double half_laplacian_l2sq_2d_ir(const Field& T, double k1, double k2) {
    if (T.grid.dim != 2)
        throw std::domain_error("half_laplacian_l2sq_2d_ir: dim must be 2");
    const double pi = std::numbers::pi;
    auto chi = [k1, k2, pi](double k) {
        if (k <= k1) return 1.0;
        if (k >= k2) return 0.0;
        const double c = std::cos(0.5 * pi * (k - k1) / (k2 - k1));
        return c * c;
    };
    Field hat = fourier_forward(T);
    const int m = T.grid.points_per_axis;
    const double dk = pi / T.grid.half_width[0];
    double sum = 0.0, msum = 0.0, c2 = 0.0;
    int cnt = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const double k = std::hypot(T.grid.freq(0, i), T.grid.freq(1, j));
            if (k == 0.0) continue;
            const double a2 = std::norm(hat.at(i, j));
            sum += k * a2;
            if (k >= k1 && k <= k2) {
                c2 += k * k * a2;
                ++cnt;
            }
            msum += chi(k) / k;
        }
    if (cnt > 0) c2 /= cnt;
    sum *= dk * dk;
    msum *= dk * dk;
    // Continuum model integral: INT |k| (c/|k|)^2 chi d^2k = 2 pi c^2 INT chi dk,
    // and the cos^2 ramp integrates to (k2 - k1)/2.
    const double cont = c2 * 2.0 * pi * (k1 + 0.5 * (k2 - k1));
    const double twopi = 2.0 * pi;
    return (sum - c2 * msum + cont) / (twopi * twopi);
}

// ||(-Delta_y)^{1/4} X(E g1 . conj(E g2))||^2 over the plane orthogonal to the
// line direction omega = e1, where X integrates along that line.
inline double sphere_identity_lhs(const std::function<cplx(const Vec3&)>& g1,
                                  const std::function<cplx(const Vec3&)>& g2,
                                  double radius, int n, std::array<double, 3> hw,
                                  int npolar, int nazimuth, double* edge_ratio) {
    GridSpec grid(3, hw, n);
    SphereDensity d1{radius, 3, g1, npolar, nazimuth};
    SphereDensity d2{radius, 3, g2, npolar, nazimuth};
    Field E1 = extension_sphere(d1, grid);
    Field E2 = extension_sphere(d2, grid);
    Field F(grid, Side::space);
    for (std::size_t i = 0; i < F.values.size(); ++i)
        F.values[i] = E1.values[i] * std::conj(E2.values[i]);
    if (edge_ratio) *edge_ratio = detail::boundary_ratio(F);
    const Frame fr = Frame::from_direction(3, {1.0, 0.0, 0.0});
    Field T = kplane_transform(F, fr, 1, 0.0);
    // The infrared model window sits well inside the |k| <= 2r support of
    // the transform but above the smoothing scale pi/L of the box.
    return half_laplacian_l2sq_2d_ir(T, 0.7 * radius, 1.4 * radius);
}

inline IdentityReport verify_sphere_identity(const std::function<cplx(const Vec3&)>& g1,
                                             const std::function<cplx(const Vec3&)>& g2,
                                             double radius = 1.0,
                                             const IdentitySettings& st = {}) {
    const int n = detail::scaled_even(96, st.refine);
    const std::array<double, 3> hw{30.0, 14.0, 14.0};
    const int npol_ext = detail::scaled_count(64, st.refine);
    const int naz_ext = detail::scaled_count(128, st.refine);
    const int npol_rhs = detail::scaled_count(96, st.refine);
    const int naz_rhs = detail::scaled_count(192, st.refine);

    double edge = 0.0;
    const double lhs =
        sphere_identity_lhs(g1, g2, radius, n, hw, npol_ext, naz_ext, &edge);
    const Frame fr = Frame::from_direction(3, {1.0, 0.0, 0.0});
    const SphereRhsParts rhs =
        sphere_rhs_parts(g1, g2, radius, fr, npol_rhs, naz_rhs, st.guard_delta);

    IdentityReport r;
    r.name = "sphere-identity";
    r.lhs = lhs;
    r.correction = 0.0;
    r.excised_mass = rhs.excised;
    r.params = {{"radius", radius},
                {"grid_n", static_cast<double>(n)},
                {"half_width_line", hw[0]},
                {"half_width_perp", hw[1]},
                {"ext_npolar", static_cast<double>(npol_ext)},
                {"ext_nazimuth", static_cast<double>(naz_ext)},
                {"rhs_npolar", static_cast<double>(npol_rhs)},
                {"rhs_nazimuth", static_cast<double>(naz_rhs)},
                {"guard_delta", st.guard_delta},
                {"edge_ratio", edge},
                {"rhs_imag", rhs.fourwave_imag},
                {"constant_audit",
                 rhs.fourwave != 0.0
                     ? std::pow(2.0 * std::numbers::pi, 4) * lhs / rhs.fourwave
                     : 0.0}};
    finalize_report(r, lhs, rhs.fourwave, st.tolerance);
    return r;
}

inline IdentityReport verify_sphere_corollary(const std::function<cplx(const Vec3&)>& g1,
                                              const std::function<cplx(const Vec3&)>& g2,
                                              double radius = 1.0,
                                              const IdentitySettings& st = {}) {
    const int n = detail::scaled_even(96, st.refine);
    const std::array<double, 3> hw{30.0, 14.0, 14.0};
    const int npol_ext = detail::scaled_count(64, st.refine);
    const int naz_ext = detail::scaled_count(128, st.refine);
    const int npol_rhs = detail::scaled_count(96, st.refine);
    const int naz_rhs = detail::scaled_count(192, st.refine);

    double edge = 0.0;
    const double lhs =
        sphere_identity_lhs(g1, g2, radius, n, hw, npol_ext, naz_ext, &edge);
    const Frame fr = Frame::from_direction(3, {1.0, 0.0, 0.0});
    const SphereRhsParts rhs =
        sphere_rhs_parts(g1, g2, radius, fr, npol_rhs, naz_rhs, st.guard_delta);

    const double scale = std::max(std::abs(rhs.fourwave), 1e-14);
    // Node-exact rearrangement check: the |.|^2 decomposition of the
    // integrand must reproduce the four-factor sum to rounding.  The
    // imaginary part is only quadrature-small: the symmetry killing it maps
    // nodes to off-grid reflected points.
    const bool algebra_ok =
        std::abs(rhs.pointwise - rhs.fourwave) <= 1e-10 * scale &&
        std::abs(rhs.fourwave_imag) <= 1e-3 * scale;
    const bool nonneg_ok = rhs.correction_I >= -1e-12 * scale;

    IdentityReport r;
    r.name = "sphere-corollary";
    r.lhs = lhs;
    r.correction = rhs.correction_I;
    r.excised_mass = rhs.excised;
    r.params = {{"radius", radius},
                {"grid_n", static_cast<double>(n)},
                {"edge_ratio", edge},
                {"modulus_term", rhs.modulus},
                {"pointwise_vs_fourwave", std::abs(rhs.pointwise - rhs.fourwave) / scale},
                {"rhs_imag", rhs.fourwave_imag},
                {"correction_nonneg", nonneg_ok ? 1.0 : 0.0}};
    finalize_report(r, lhs, rhs.modulus - rhs.correction_I, st.tolerance);
    r.passed = r.passed && algebra_ok && nonneg_ok;
    return r;
}

// ---------------------------------------------------------------------------
// Fourth-power norm of the constant-density sphere extension
// ---------------------------------------------------------------------------

struct SteinTomasReport {
    IdentityReport fourth_power;  // ||E 1||_{L^4}^4 against 256 pi^6
    IdentityReport bilinear;      // INTINT |xi + zeta|^{-1} against (4 pi)^2
};

inline SteinTomasReport check_stein_tomas_sphere(const IdentitySettings& st = {}) {
    const double pi = std::numbers::pi;
    // Radial quadrature of |E1(r)|^4 r^2 with the field evaluated by surface
    // quadrature; the oscillatory envelope beyond the cutoff contributes its
    // mean (3/8) |4 pi / r|^4 r^2 tail analytically.
    // The constant density is rotation invariant, so the field is radial and
    // can be sampled along the polar axis; the phase then depends on the
    // polar angle only, and the polar rule must resolve r * cos(theta) out to
    // the radial cutoff.
    SphereDensity unit{1.0, 3, [](const Vec3&) { return cplx{1.0, 0.0}; },
                       detail::scaled_count(768, st.refine), 8};
    const std::vector<SurfaceNode> nodes = sphere_nodes(unit);
    auto field_at = [&](double r) {
        cplx acc{0.0, 0.0};
        for (const SurfaceNode& nd : nodes)
            acc += nd.weight * std::polar(1.0, r * nd.xi[2]);
        return acc;
    };
    const double r_cut = 400.0;
    const double panel = 0.5 * pi;
    const int npanel = static_cast<int>(std::ceil(r_cut / panel));
    double acc = 0.0;
    for (int p = 0; p < npanel; ++p) {
        const QuadratureRule1D q = gauss_legendre(6, p * panel, (p + 1) * panel);
        for (std::size_t i = 0; i < q.nodes.size(); ++i) {
            const double r = q.nodes[i];
            const double a2 = std::norm(field_at(r));
            acc += q.weights[i] * a2 * a2 * r * r;
        }
    }
    const double R = npanel * panel;
    const double tail = std::pow(4.0 * pi, 4) * 3.0 / (8.0 * R);
    const double lhs4 = 4.0 * pi * (acc + tail);

    SteinTomasReport out;
    out.fourth_power.name = "stein-tomas-fourth-power";
    out.fourth_power.lhs = lhs4;
    out.fourth_power.params = {{"radial_cutoff", R},
                               {"npolar", static_cast<double>(unit.npolar)},
                               {"nazimuth", static_cast<double>(unit.nazimuth)},
                               {"constant_ratio",
                                std::pow(lhs4, 0.25) / (2.0 * pi * std::sqrt(4.0 * pi))}};
    finalize_report(out.fourth_power, lhs4, 256.0 * std::pow(pi, 6), 1e-3);

    // Bilinear reduction: fixing xi at the pole, the inner surface integral of
    // 1/|xi + zeta| depends only on the polar angle of zeta.
    const QuadratureRule1D th = gauss_legendre(detail::scaled_count(256, st.refine),
                                               0.0, pi);
    double inner = 0.0;
    for (std::size_t i = 0; i < th.nodes.size(); ++i) {
        const double t = th.nodes[i];
        const double dist = std::sqrt(std::max(2.0 + 2.0 * std::cos(t), 0.0));
        inner += th.weights[i] * 2.0 * pi * std::sin(t) / dist;
    }
    const double bilinear = 4.0 * pi * inner;
    out.bilinear.name = "stein-tomas-bilinear";
    out.bilinear.lhs = bilinear;
    out.bilinear.params = {{"ntheta", static_cast<double>(th.nodes.size())}};
    finalize_report(out.bilinear, bilinear, std::pow(4.0 * pi, 2), 1e-4);
    return out;
}

// ---------------------------------------------------------------------------
// Hyperboloid identity (d = 2)
// ---------------------------------------------------------------------------

struct HyperboloidRhsParts {
    double fourwave = 0.0;
    double fourwave_imag = 0.0;
    double pointwise = 0.0;
    double modulus = 0.0;
    double correction_I = 0.0;
};

// Kernel quadrature over the mass shell with the Lorentz-invariant measure;
// the partner points are obtained from the boost rapidity of the pair sum.
inline HyperboloidRhsParts hyperboloid_rhs_parts(
    const std::function<cplx(const Vec2&)>& f1, const std::function<cplx(const Vec2&)>& f2,
    double R, double mass, const Frame& fr, int nradial, int nangular) {
    HyperboloidFunctionRd unit{mass, 2, [](const Vec2&) { return cplx{1.0, 0.0}; }, R,
                               nradial, nangular};
    const std::vector<SurfaceNode> nodes = hyperboloid_nodes(unit);
    const std::size_t m = nodes.size();
    std::vector<double> w(m), xw(m), mx(m), gx(m), phi(m);
    std::vector<Vec2> pp(m);  // component orthogonal to omega (in-plane)
    std::vector<cplx> v1(m), v2(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Vec2 xi{nodes[i].xi[0], nodes[i].xi[1]};
        w[i] = nodes[i].weight.real();
        phi[i] = nodes[i].xi[2];
        const double c = xi[0] * fr.omega[0] + xi[1] * fr.omega[1];
        xw[i] = c;
        pp[i] = {xi[0] - c * fr.omega[0], xi[1] - c * fr.omega[1]};
        mx[i] = std::sqrt(mass * mass + dot2(pp[i], pp[i]));
        gx[i] = std::asinh(c / mx[i]);
        v1[i] = f1(xi);
        v2[i] = f2(xi);
    }
    HyperboloidRhsParts out;
    cplx fw{0.0, 0.0};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const double s = phi[i] + phi[j];
            const double sw = xw[i] + xw[j];
            const double K = 2.0 * s / (s * s - sw * sw);
            const double gP = lorentz_gamma({sw, s});
            const double xt = mx[i] * std::sinh(2.0 * gP - gx[i]);
            const double zt = mx[j] * std::sinh(2.0 * gP - gx[j]);
            const Vec2 xti{pp[i][0] + xt * fr.omega[0], pp[i][1] + xt * fr.omega[1]};
            const Vec2 zti{pp[j][0] + zt * fr.omega[0], pp[j][1] + zt * fr.omega[1]};
            const cplx a = v1[i], d = v2[j];
            const cplx b = f2(xti), c = f1(zti);
            const double wk = w[i] * w[j] * K;
            fw += wk * (a * std::conj(b) * d * std::conj(c));
            const cplx ad = a * d, bc = b * c;
            out.pointwise +=
                wk * 0.5 * (std::norm(ad) + std::norm(bc) - std::norm(ad - bc));
            out.modulus += wk * std::norm(a) * std::norm(d);
            out.correction_I += wk * 0.5 * std::norm(ad - bc);
        }
    }
    const double CH = std::pow(2.0 * std::numbers::pi, 4);  // (2 pi)^{2d}, d = 2
    out.fourwave = CH * fw.real();
    out.fourwave_imag = CH * fw.imag();
    out.pointwise *= CH;
    out.modulus *= CH;
    out.correction_I *= 0.5 * CH;
    return out;
}

// If f2 is empty, f2 = f1 is assumed.
//
// The slice-norm profile of the mass-shell product reaches its t^-2
// asymptote only around |t| ~ 100, far beyond any affordable 3-D space-time
// grid.  The left side is therefore integrated slice by slice: u(., t) is
// recovered on a large 2-D spatial box from the frequency multiplier
// e^{i t phi_m}, which agrees with the surface-extension operator up to
// periodization (the two paths are cross-checked in the tests), and the
// remaining |t| > T contribution comes from the power-law fit.
inline IdentityReport verify_hyperboloid_identity(
    const std::function<cplx(const Vec2&)>& f1, std::function<cplx(const Vec2&)> f2,
    double R, double mass = 1.0, const IdentitySettings& st = {}) {
    const bool same = !f2;
    if (same) f2 = f1;
    const bool quick = st.refine < 1.0;
    const double Lx = quick ? 120.0 : 200.0;
    const int nx = detail::scaled_even(512, quick ? 0.5 : 1.0);
    const double T = quick ? 90.0 : 160.0;
    const int nt = quick ? 240 : 800;  // slices across [-T, T]
    if (std::numbers::pi * nx / (2.0 * Lx) < 1.5 * R)
        throw ResolutionError("verify_hyperboloid_identity: slice grid cannot resolve R");
    GridSpec gx(2, Lx, nx);
    auto lift = [&](const std::function<cplx(const Vec2&)>& f) {
        Field A(gx, Side::frequency);
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < nx; ++j) {
                const double k0 = gx.freq(0, i), k1 = gx.freq(1, j);
                const double phi = std::sqrt(mass * mass + k0 * k0 + k1 * k1);
                A.at(i, j) =
                    std::pow(2.0 * std::numbers::pi, 2) * f({-k0, -k1}) / phi;
            }
        return A;
    };
    const Field A1 = lift(f1);
    const Field A2 = same ? A1 : lift(f2);
    const Frame fr2 = Frame::from_direction(2, {0.0, 1.0, 0.0});
    const double dt = 2.0 * T / nt;
    TimeSlicedLhs lhs;
    double edge = 0.0;
    Field P(gx, Side::space);
    for (int it = 0; it <= nt; ++it) {
        const double t = -T + it * dt;
        auto evolve = [&](const Field& A) {
            Field G = A;
            for (int i = 0; i < nx; ++i)
                for (int j = 0; j < nx; ++j) {
                    const double k0 = gx.freq(0, i), k1 = gx.freq(1, j);
                    G.at(i, j) *= std::polar(
                        1.0, t * std::sqrt(mass * mass + k0 * k0 + k1 * k1));
                }
            return fourier_inverse(G);
        };
        Field u1 = evolve(A1);
        if (same) {
            for (std::size_t i = 0; i < P.values.size(); ++i)
                P.values[i] = cplx{std::norm(u1.values[i]), 0.0};
        } else {
            Field u2 = evolve(A2);
            for (std::size_t i = 0; i < P.values.size(); ++i)
                P.values[i] = u1.values[i] * std::conj(u2.values[i]);
        }
        if (it == 0) edge = detail::boundary_ratio(P);
        Field Tr = kplane_transform(P, fr2, 1, 0.0);
        const double I = half_derivative_l2sq_1d(Tr);
        lhs.box += ((it == 0 || it == nt) ? 0.5 : 1.0) * I * dt;
        lhs.profile.emplace_back(std::abs(t), I);
    }
    lhs.tail = 2.0 * power_tail_integral(lhs.profile, 0.62 * T, T, 2.0);

    const int nr_rhs = detail::scaled_count(48, st.refine);
    const int na_rhs = detail::scaled_count(64, st.refine);
    const HyperboloidRhsParts rhs =
        hyperboloid_rhs_parts(f1, f2, R, mass, fr2, nr_rhs, na_rhs);
    const double scale = std::max(std::abs(rhs.fourwave), 1e-14);
    const bool algebra_ok =
        std::abs(rhs.pointwise - rhs.fourwave) <= 1e-10 * scale &&
        std::abs(rhs.fourwave_imag) <= 1e-3 * scale;
    const bool nonneg_ok = rhs.correction_I >= -1e-12 * scale;

    IdentityReport r;
    r.name = "hyperboloid-identity";
    r.lhs = lhs.total();
    r.correction = rhs.correction_I;
    r.params = {{"mass", mass},
                {"support_radius", R},
                {"slice_grid_n", static_cast<double>(nx)},
                {"slice_half_width", Lx},
                {"time_cutoff", T},
                {"time_steps", static_cast<double>(nt)},
                {"lhs_box", lhs.box},
                {"lhs_tail", lhs.tail},
                {"edge_ratio", edge},
                {"modulus_minus_I", rhs.modulus - rhs.correction_I},
                {"pointwise_vs_fourwave", std::abs(rhs.pointwise - rhs.fourwave) / scale},
                {"rhs_imag", rhs.fourwave_imag},
                {"correction_nonneg", nonneg_ok ? 1.0 : 0.0},
                {"constant_audit",
                 rhs.fourwave != 0.0
                     ? std::pow(2.0 * std::numbers::pi, 4) * lhs.total() / rhs.fourwave
                     : 0.0}};
    finalize_report(r, lhs.total(), rhs.fourwave, st.tolerance);
    r.passed = r.passed && algebra_ok && nonneg_ok;
    return r;
}

// ---------------------------------------------------------------------------
// Flat-surface (paraboloid) identities, d = 2
// ---------------------------------------------------------------------------

// Max violation of the scalar constraint identity
//   |x - h| |z - u| + (z u - z h - x u + x h) = |x - u|^2
// on random quadruples satisfying x - h + z - u = 0, x^2 - h^2 + z^2 - u^2 = 0
// (whose solution set is {h, u} = {x, z}).
inline double algebraic_identity_max_violation(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        const double x = U(rng), z = U(rng);
        const bool swap = rng() & 1u;
        const double h = swap ? z : x;
        const double u = swap ? x : z;
        const double lhs = std::abs(x - h) * std::abs(z - u) +
                           (z * u - z * h - x * u + x * h);
        const double rhs = (x - u) * (x - u);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

// Full-derivative line-transform identity for |u|^2 with the Gram-form
// commutator correction J.
inline IdentityReport verify_pv_identity(const std::function<cplx(const Vec2&)>& f,
                                         double R, const IdentitySettings& st = {}) {
    const int n = detail::scaled_even(96, st.refine);
    const std::array<double, 3> hw =
        st.refine < 1.0 ? std::array<double, 3>{14.0, 10.0, 8.0}
                        : std::array<double, 3>{24.0, 12.0, 10.0};
    GridSpec grid(3, hw, n);
    const int nr_ext = detail::scaled_count(160, st.refine);
    const int na_ext = detail::scaled_count(96, st.refine);
    ParaboloidFunctionRd F{2, f, R, 0.0, nr_ext, na_ext};
    Field u = extension_paraboloid(F, grid);
    Field P(grid, Side::space);
    for (std::size_t i = 0; i < P.values.size(); ++i)
        P.values[i] = cplx{std::norm(u.values[i]), 0.0};
    const double edge = detail::boundary_ratio(P);
    const Frame fr2 = Frame::from_direction(2, {0.0, 1.0, 0.0});
    const TimeSlicedLhs lhs = time_sliced_radon_lhs(P, fr2, SDeriv::full, 3.0);

    // Commutator term J: per (s, t), the Gram determinant of the slice of u
    // and its s-derivative over the line orthogonal to omega.
    GridSpec sg(2, {hw[0], hw[1], 1.0}, n);
    const double h0 = grid.spacing(0), h1 = grid.spacing(1), dt = grid.spacing(2);
    double Jbox = 0.0;
    std::vector<std::pair<double, double>> jprof;
    Field slice(sg, Side::space);
    for (int it = 0; it < n; ++it) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) slice.at(i, j) = u.at(i, j, it);
        Field du = derivative_axis(slice, 1);
        double Jt = 0.0;
        for (int j = 0; j < n; ++j) {
            double na2 = 0.0, nb2 = 0.0;
            cplx ip{0.0, 0.0};
            for (int i = 0; i < n; ++i) {
                const cplx A = slice.at(i, j), B = du.at(i, j);
                na2 += std::norm(A);
                nb2 += std::norm(B);
                ip += A * std::conj(B);
            }
            na2 *= h0;
            nb2 *= h0;
            ip *= h0;
            Jt += 2.0 * (na2 * nb2 - std::norm(ip)) * h1;
        }
        Jbox += Jt * dt;
        jprof.emplace_back(std::abs(grid.coord(2, it)), Jt);
    }
    const double J =
        Jbox + 2.0 * power_tail_integral(jprof, 0.6 * hw[2], hw[2], 3.0);

    // Closed side via the marginal of |f|^2 transverse to omega.
    const int nq = detail::scaled_count(200, st.refine);
    const QuadratureRule1D qs = gauss_legendre(nq, -R, R);
    std::vector<double> A(nq, 0.0);
    for (int ip = 0; ip < nq; ++ip) {
        double acc = 0.0;
        for (int k = 0; k < nq; ++k) {
            const Vec2 xi{qs.nodes[k] * fr2.basis_perp[0][0] + qs.nodes[ip] * fr2.omega[0],
                          qs.nodes[k] * fr2.basis_perp[0][1] + qs.nodes[ip] * fr2.omega[1]};
            acc += qs.weights[k] * std::norm(f(xi));
        }
        A[ip] = acc;
    }
    double rhs = 0.0;
    for (int ip = 0; ip < nq; ++ip)
        for (int jq = 0; jq < nq; ++jq)
            rhs += qs.weights[ip] * qs.weights[jq] *
                   std::abs(qs.nodes[ip] - qs.nodes[jq]) * A[ip] * A[jq];
    rhs *= 0.5 * std::pow(2.0 * std::numbers::pi, 4);

    const double algebra = algebraic_identity_max_violation(st.seed, 100000);

    IdentityReport r;
    r.name = "pv-identity";
    r.lhs = lhs.total();
    r.correction = J;
    r.params = {{"support_radius", R},
                {"grid_n", static_cast<double>(n)},
                {"half_width_x0", hw[0]},
                {"half_width_s", hw[1]},
                {"half_width_t", hw[2]},
                {"lhs_box", lhs.box},
                {"lhs_tail", lhs.tail},
                {"edge_ratio", edge},
                {"commutator_J", J},
                {"algebraic_check_max_violation", algebra},
                {"constant_audit",
                 rhs != 0.0 ? std::pow(2.0 * std::numbers::pi, 4) *
                                  (lhs.total() + J) / rhs
                            : 0.0}};
    finalize_report(r, lhs.total() + J, rhs, st.tolerance);
    r.passed = r.passed && algebra <= 1e-12;
    return r;
}

// Half-derivative line-transform identity for E f1 . conj(E f2) on the
// paraboloid, with the closed side reduced to the cross-correlation
//   M(p, q) = INT f1(xi_perp + p w) conj(f2(xi_perp + q w)) d xi_perp.
inline IdentityReport verify_honest_paraboloid(
    const std::function<cplx(const Vec2&)>& f1, std::function<cplx(const Vec2&)> f2,
    double R, const IdentitySettings& st = {}) {
    const bool same = !f2;
    if (same) f2 = f1;
    const int n = detail::scaled_even(96, st.refine);
    const std::array<double, 3> hw =
        st.refine < 1.0 ? std::array<double, 3>{14.0, 10.0, 8.0}
                        : std::array<double, 3>{24.0, 12.0, 10.0};
    GridSpec grid(3, hw, n);
    const int nr_ext = detail::scaled_count(160, st.refine);
    const int na_ext = detail::scaled_count(96, st.refine);
    Field u1 = extension_paraboloid({2, f1, R, 0.0, nr_ext, na_ext}, grid);
    Field u2 = same ? u1 : extension_paraboloid({2, f2, R, 0.0, nr_ext, na_ext}, grid);
    Field P(grid, Side::space);
    for (std::size_t i = 0; i < P.values.size(); ++i)
        P.values[i] = u1.values[i] * std::conj(u2.values[i]);
    const double edge = detail::boundary_ratio(P);
    const Frame fr2 = Frame::from_direction(2, {0.0, 1.0, 0.0});
    const TimeSlicedLhs lhs = time_sliced_radon_lhs(P, fr2, SDeriv::half, 2.0);

    const double C = std::pow(2.0 * std::numbers::pi, 4);
    // Closed side: (C/2) INTINT |M(p,q)|^2 dp dq.
    const int np = detail::scaled_count(140, st.refine);
    const QuadratureRule1D qp = gauss_legendre(np, -R, R);
    auto at = [&](const std::function<cplx(const Vec2&)>& f, double perp, double along) {
        const Vec2 xi{perp * fr2.basis_perp[0][0] + along * fr2.omega[0],
                      perp * fr2.basis_perp[0][1] + along * fr2.omega[1]};
        return f(xi);
    };
    std::vector<cplx> F1(np * np), F2(np * np);  // [perp index k][along index p]
    for (int k = 0; k < np; ++k)
        for (int ip = 0; ip < np; ++ip) {
            F1[k * np + ip] = at(f1, qp.nodes[k], qp.nodes[ip]);
            F2[k * np + ip] = at(f2, qp.nodes[k], qp.nodes[ip]);
        }
    double rhs = 0.0;
    for (int ip = 0; ip < np; ++ip)
        for (int jq = 0; jq < np; ++jq) {
            cplx M{0.0, 0.0};
            for (int k = 0; k < np; ++k)
                M += qp.weights[k] * F1[k * np + ip] * std::conj(F2[k * np + jq]);
            rhs += qp.weights[ip] * qp.weights[jq] * std::norm(M);
        }
    rhs *= 0.5 * C;

    // Reduced-node cross checks: the four-factor quadruple sum, its
    // pointwise |.|^2 decomposition, and the nonnegative defect term.
    const int nc = detail::scaled_count(40, st.refine);
    const QuadratureRule1D qc = gauss_legendre(nc, -R, R);
    std::vector<cplx> G1(nc * nc), G2(nc * nc);
    for (int k = 0; k < nc; ++k)
        for (int ip = 0; ip < nc; ++ip) {
            G1[k * nc + ip] = at(f1, qc.nodes[k], qc.nodes[ip]);
            G2[k * nc + ip] = at(f2, qc.nodes[k], qc.nodes[ip]);
        }
    cplx fw{0.0, 0.0};
    double pointwise = 0.0, modulus = 0.0, corrI = 0.0;
    for (int k = 0; k < nc; ++k)
        for (int l = 0; l < nc; ++l) {
            const double wkl = qc.weights[k] * qc.weights[l];
            for (int ip = 0; ip < nc; ++ip)
                for (int jq = 0; jq < nc; ++jq) {
                    const double w4 = wkl * qc.weights[ip] * qc.weights[jq];
                    const cplx a = G1[k * nc + ip], d = G2[l * nc + jq];
                    const cplx b = G2[k * nc + jq], c = G1[l * nc + ip];
                    fw += w4 * (a * std::conj(b) * d * std::conj(c));
                    const cplx ad = a * d, bc = b * c;
                    pointwise +=
                        w4 * 0.5 * (std::norm(ad) + std::norm(bc) - std::norm(ad - bc));
                    modulus += w4 * std::norm(a) * std::norm(d);
                    corrI += w4 * 0.5 * std::norm(ad - bc);
                }
        }
    const double fourwave = 0.5 * C * fw.real();
    const double fourwave_imag = 0.5 * C * fw.imag();
    pointwise *= 0.5 * C;
    modulus *= 0.5 * C;
    corrI *= 0.25 * C;
    const double scale = std::max(std::abs(fourwave), 1e-14);
    const bool algebra_ok = std::abs(pointwise - fourwave) <= 1e-10 * scale &&
                            std::abs(fourwave_imag) <= 1e-3 * scale;
    const bool nonneg_ok = corrI >= -1e-12 * scale;

    IdentityReport r;
    r.name = "honest-paraboloid";
    r.lhs = lhs.total();
    r.correction = corrI;
    r.params = {{"support_radius", R},
                {"grid_n", static_cast<double>(n)},
                {"half_width_x0", hw[0]},
                {"half_width_s", hw[1]},
                {"half_width_t", hw[2]},
                {"lhs_box", lhs.box},
                {"lhs_tail", lhs.tail},
                {"edge_ratio", edge},
                {"fourwave_reduced", fourwave},
                {"modulus_minus_I_reduced", modulus - corrI},
                {"pointwise_vs_fourwave", std::abs(pointwise - fourwave) / scale},
                {"rhs_imag", fourwave_imag},
                {"correction_nonneg", nonneg_ok ? 1.0 : 0.0},
                {"constant_audit",
                 rhs != 0.0
                     ? std::pow(2.0 * std::numbers::pi, 4) * lhs.total() / rhs
                     : 0.0}};
    finalize_report(r, lhs.total(), rhs, st.tolerance);
    r.passed = r.passed && algebra_ok && nonneg_ok;
    return r;
}

// ---------------------------------------------------------------------------
// Sharp constants
// ---------------------------------------------------------------------------

// ||(-Delta)^{(2-d)/4} |u|^2||^2 <= OT(d) ||u(0)||^4 for the free
// Schrodinger evolution; equality for Gaussian data.
inline double ot_constant(int d) {
    // 2^{-d} pi^{(2-d)/2} / Gamma(d/2) simplifies exactly for small d (the
    // half-integer gamma values cancel the pi powers); d = 1 must give
    // exactly 1/2.
    switch (d) {
        case 1: return 0.5;
        case 2: return 0.25;
        case 3: return 0.25 / std::numbers::pi;
        default:
            return std::pow(2.0, -d) * std::pow(std::numbers::pi, 0.5 * (2 - d)) /
                   std::tgamma(0.5 * d);
    }
}

// Product form from the direction average of the bilinear bound:
// (2 pi)^{1-d} |S^{d-1}| / 4.
inline double ot_constant_product(int d) {
    return std::pow(2.0 * std::numbers::pi, 1.0 - d) * sphere_area(d - 1) / 4.0;
}

inline double pv_constant(int d) {
    return std::pow(2.0, -3.0 * d) * std::pow(std::numbers::pi, 0.5 * (1 - 5 * d)) /
           std::tgamma(0.5 * (d + 1));
}

// Product form: Plancherel prefactor x bilinear constant x direction average
// of |v . w| per unit |v|.
inline double pv_constant_product(int d) {
    const double pi = std::numbers::pi;
    return std::pow(2.0 * pi, 1.0 - d) * pi * std::pow(2.0 * pi, -(2.0 * d + 1.0)) *
           std::pow(pi, 0.5 * (d - 1)) / std::tgamma(0.5 * (d + 1));
}

// ||(-Delta_x)^{(2-d)/4} |u|^2||^2_{L^2(x,t)} for u^(xi, t) = u0^(xi)
// e^{i t |xi|^2}, evaluated per time slice with a power-law tail fit.
// Requires u0 real and even (the slice profile is then even in t).
inline double schrodinger_biline_norm(int d, const std::function<cplx(const Vec2&)>& u0,
                                      double Lx, int nx, double T, int nt) {
    GridSpec gx(d, Lx, nx);
    Field f0(gx, Side::space);
    const int n = gx.points_per_axis;
    if (d == 1) {
        for (int i = 0; i < n; ++i) f0.at(i) = u0({gx.coord(0, i), 0.0});
    } else {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) f0.at(i, j) = u0({gx.coord(0, i), gx.coord(1, j)});
    }
    Field fh = fourier_forward(f0);
    std::vector<std::pair<double, double>> prof;
    double box = 0.0;
    const double dt = T / nt;
    for (int it = 0; it <= nt; ++it) {
        const double t = it * dt;
        Field g = fh;
        detail::for_each_index(d, n, [&](int i0, int i1, int i2) {
            const std::array<int, 3> idx{i0, i1, i2};
            double k2 = 0.0;
            for (int a = 0; a < d; ++a) {
                const double k = gx.freq(a, idx[a]);
                k2 += k * k;
            }
            g.at(i0, i1, i2) *= std::polar(1.0, t * k2);
        });
        Field ut = fourier_inverse(g);
        double I = 0.0;
        if (d == 2) {
            for (const cplx& v : ut.values) {
                const double a2 = std::norm(v);
                I += a2 * a2;
            }
            I *= gx.cell_volume();
        } else {
            Field w(gx, Side::space);
            for (std::size_t i = 0; i < w.values.size(); ++i)
                w.values[i] = cplx{std::norm(ut.values[i]), 0.0};
            I = half_derivative_l2sq_1d(w);
        }
        box += ((it == 0 || it == nt) ? 0.5 : 1.0) * I * dt;
        prof.emplace_back(t, I);
    }
    const double tail = power_tail_integral(prof, 0.6 * T, T, 2.0);
    return 2.0 * (box + tail);  // the profile is even in t
}

// Closed forms, defining products, and numerical Gaussian equality for the
// sharp constants of the |u|^2 space-time bounds.
inline std::vector<IdentityReport> check_constants(double refine = 1.0) {
    std::vector<IdentityReport> out;
    for (int d = 1; d <= 3; ++d) {
        IdentityReport r;
        r.name = "ot-constant-product-d" + std::to_string(d);
        r.lhs = ot_constant(d);
        finalize_report(r, r.lhs, ot_constant_product(d), 1e-13);
        out.push_back(r);
    }
    for (int d = 1; d <= 3; ++d) {
        IdentityReport r;
        r.name = "pv-constant-product-d" + std::to_string(d);
        r.lhs = pv_constant(d);
        finalize_report(r, r.lhs, pv_constant_product(d), 1e-13);
        out.push_back(r);
    }
    {
        IdentityReport r;
        r.name = "ot-bis-d1";
        r.lhs = ot_constant(1);
        finalize_report(r, r.lhs, 0.5, 1e-13);
        out.push_back(r);
    }
    // Gaussian equality, d = 1: u0 = e^{-x^2}, ||u0||^4 = pi/2.
    {
        auto u0 = [](const Vec2& x) { return cplx{std::exp(-x[0] * x[0]), 0.0}; };
        const int nx = detail::scaled_even(2048, refine);
        const int nt = detail::scaled_count(480, refine);
        const double num = schrodinger_biline_norm(1, u0, 96.0, nx, 6.0, nt);
        IdentityReport r;
        r.name = "ot-gaussian-equality-d1";
        r.lhs = num / (0.5 * std::numbers::pi);
        r.params = {{"grid_n", static_cast<double>(nx)},
                    {"time_steps", static_cast<double>(nt)},
                    {"raw_norm", num}};
        finalize_report(r, r.lhs, ot_constant(1), 1e-3);
        out.push_back(r);
    }
    // Gaussian equality, d = 2: u0 = e^{-|x|^2}, ||u0||^4 = pi^2/4.  This is
    // also the direction-averaging recovery of the constant 1/4 from the
    // flat-surface identity.
    {
        auto u0 = [](const Vec2& x) {
            return cplx{std::exp(-x[0] * x[0] - x[1] * x[1]), 0.0};
        };
        const int nx = detail::scaled_even(768, refine);
        const int nt = detail::scaled_count(240, refine);
        const double num = schrodinger_biline_norm(2, u0, 48.0, nx, 6.0, nt);
        IdentityReport r;
        r.name = "ot-gaussian-equality-d2";
        r.lhs = num / (0.25 * std::numbers::pi * std::numbers::pi);
        r.params = {{"grid_n", static_cast<double>(nx)},
                    {"time_steps", static_cast<double>(nt)},
                    {"raw_norm", num}};
        finalize_report(r, r.lhs, ot_constant(2), 1e-3);
        out.push_back(r);
    }
    return out;
}

}  // namespace exid
