#pragma once
// Surface extension operators (sphere, hyperboloid, paraboloid), the
// k-plane/Radon transform on gridded fields, the Fourier-slice and
// Plancherel-type relations, and the Klein-Gordon propagator.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "fourier.hpp"
#include "geometry.hpp"
#include "grid.hpp"
#include "interpolate.hpp"
#include "quadrature.hpp"

namespace exid {

struct ResolutionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Surface densities and their quadrature nodes
// ---------------------------------------------------------------------------

// Density g on the radius-r sphere in R^3, with the measure parametrized over
// the unit sphere: INT g dsigma_r = INT_{S^2} g(r w) dsigma(w), total 4 pi.
struct SphereDensity {
    double radius = 1.0;
    int n = 3;
    std::function<cplx(const Vec3&)> density;
    int npolar = 128;
    int nazimuth = 256;
};

struct SurfaceNode {
    Vec3 xi;      // frequency-space location (xi, and for (x,t) surfaces xi[d] = phase speed)
    cplx weight;  // density value times quadrature weight (and measure factor)
};

inline std::vector<SurfaceNode> sphere_nodes(const SphereDensity& g) {
    if (g.n != 3) throw std::domain_error("sphere_nodes: only n = 3 is supported");
    std::vector<SurfaceNode> nodes;
    nodes.reserve(static_cast<std::size_t>(g.npolar) * g.nazimuth);
    const QuadratureRule1D pol = gauss_legendre(g.npolar, -1.0, 1.0);
    const QuadratureRule1D azi = periodic_trapezoid(g.nazimuth);
    for (int i = 0; i < g.npolar; ++i) {
        const double c = pol.nodes[i], s = std::sqrt(1.0 - c * c);
        for (int j = 0; j < g.nazimuth; ++j) {
            const double ph = azi.nodes[j];
            const Vec3 w{s * std::cos(ph), s * std::sin(ph), c};
            const Vec3 xi{g.radius * w[0], g.radius * w[1], g.radius * w[2]};
            nodes.push_back({xi, g.density(xi) * (pol.weights[i] * azi.weights[j])});
        }
    }
    return nodes;
}

// f on R^d (d = 1 or 2) with effective support radius R_f, lifted to the
// mass-m hyperboloid carrying the Lorentz-invariant measure dxi / phi_m(xi).
struct HyperboloidFunctionRd {
    double mass = 1.0;
    int d = 2;
    std::function<cplx(const Vec2&)> f;
    double support_radius = 5.0;
    int nradial = 200;
    int nangular = 200;
};

struct ParaboloidFunctionRd {
    int d = 2;
    std::function<cplx(const Vec2&)> f;
    double support_radius = 5.0;
    double vertex_offset = 0.0;
    int nradial = 200;
    int nangular = 200;
};

// Checks the declared support radius on a sample ring.
template <typename S>
inline void check_support_radius(const S& s) {
    const int m = 32;
    for (int j = 0; j < m; ++j) {
        const double th = 2.0 * std::numbers::pi * j / m;
        Vec2 p{s.support_radius * std::cos(th),
               s.d == 1 ? 0.0 : s.support_radius * std::sin(th)};
        if (s.d == 1) p[0] = (j % 2 ? 1.0 : -1.0) * s.support_radius;
        if (std::abs(s.f(p)) > 1e-12)
            throw std::invalid_argument("surface function: |f| >= 1e-12 at support radius");
    }
}

// Frequency nodes on the truncated disk |xi| <= R_f. xi[2] holds the phase
// speed phi (hyperboloid) or |xi|^2 + a (paraboloid); the weight includes the
// surface measure (1/phi for the hyperboloid, 1 for the paraboloid).
inline std::vector<SurfaceNode> hyperboloid_nodes(const HyperboloidFunctionRd& F) {
    std::vector<SurfaceNode> nodes;
    if (F.d == 2) {
        const QuadratureRule1D rad = gauss_legendre(F.nradial, 0.0, F.support_radius);
        const QuadratureRule1D ang = periodic_trapezoid(F.nangular);
        nodes.reserve(static_cast<std::size_t>(F.nradial) * F.nangular);
        for (int i = 0; i < F.nradial; ++i) {
            const double rho = rad.nodes[i];
            for (int j = 0; j < F.nangular; ++j) {
                const Vec2 xi{rho * std::cos(ang.nodes[j]), rho * std::sin(ang.nodes[j])};
                const double phi = phi_m(F.mass, rho);
                const cplx w = F.f(xi) * (rad.weights[i] * ang.weights[j] * rho / phi);
                nodes.push_back({Vec3{xi[0], xi[1], phi}, w});
            }
        }
    } else if (F.d == 1) {
        const QuadratureRule1D rad = gauss_legendre(2 * F.nradial, -F.support_radius, F.support_radius);
        for (std::size_t i = 0; i < rad.nodes.size(); ++i) {
            const double u = rad.nodes[i];
            const double phi = phi_m(F.mass, u);
            nodes.push_back({Vec3{u, phi, 0.0}, F.f({u, 0.0}) * (rad.weights[i] / phi)});
        }
    } else {
        throw std::domain_error("hyperboloid_nodes: d must be 1 or 2");
    }
    return nodes;
}

inline std::vector<SurfaceNode> paraboloid_nodes(const ParaboloidFunctionRd& F) {
    std::vector<SurfaceNode> nodes;
    if (F.d == 2) {
        const QuadratureRule1D rad = gauss_legendre(F.nradial, 0.0, F.support_radius);
        const QuadratureRule1D ang = periodic_trapezoid(F.nangular);
        nodes.reserve(static_cast<std::size_t>(F.nradial) * F.nangular);
        for (int i = 0; i < F.nradial; ++i) {
            const double rho = rad.nodes[i];
            for (int j = 0; j < F.nangular; ++j) {
                const Vec2 xi{rho * std::cos(ang.nodes[j]), rho * std::sin(ang.nodes[j])};
                const cplx w = F.f(xi) * (rad.weights[i] * ang.weights[j] * rho);
                nodes.push_back({Vec3{xi[0], xi[1], rho * rho + F.vertex_offset}, w});
            }
        }
    } else if (F.d == 1) {
        const QuadratureRule1D rad = gauss_legendre(2 * F.nradial, -F.support_radius, F.support_radius);
        for (std::size_t i = 0; i < rad.nodes.size(); ++i) {
            const double u = rad.nodes[i];
            nodes.push_back({Vec3{u, u * u + F.vertex_offset, 0.0}, F.f({u, 0.0}) * rad.weights[i]});
        }
    } else {
        throw std::domain_error("paraboloid_nodes: d must be 1 or 2");
    }
    return nodes;
}

// ---------------------------------------------------------------------------
// Extension operators: separable phase-table accumulation
// ---------------------------------------------------------------------------

namespace detail {

// Accumulates sum_nodes w * exp(i z . xi) over all grid points. dim is the
// grid dimension; node.xi[a] is the frequency conjugate to axis a.
inline void accumulate_extension(Field& out, const std::vector<SurfaceNode>& nodes) {
    const GridSpec& g = out.grid;
    const int n = g.points_per_axis;
    const int dim = g.dim;
    std::vector<cplx> p0(n), p1(n), p2(n);
    for (const SurfaceNode& nd : nodes) {
        if (std::abs(nd.weight) < 1e-300) continue;
        for (int a = 0; a < dim; ++a) {
            std::vector<cplx>& p = (a == 0) ? p0 : (a == 1 ? p1 : p2);
            const cplx step = std::polar(1.0, g.spacing(a) * nd.xi[a]);
            cplx cur = std::polar(1.0, -g.half_width[a] * nd.xi[a]);
            for (int i = 0; i < n; ++i) {
                p[i] = cur;
                cur *= step;
            }
        }
        if (dim == 1) {
            for (int i = 0; i < n; ++i) out.values[i] += nd.weight * p0[i];
        } else if (dim == 2) {
            std::size_t idx = 0;
            for (int i = 0; i < n; ++i) {
                const cplx a = nd.weight * p0[i];
                for (int j = 0; j < n; ++j, ++idx) out.values[idx] += a * p1[j];
            }
        } else {
            std::size_t idx = 0;
            for (int i = 0; i < n; ++i) {
                const cplx a = nd.weight * p0[i];
                for (int j = 0; j < n; ++j) {
                    const cplx b = a * p1[j];
                    cplx* row = out.values.data() + idx;
                    for (int k = 0; k < n; ++k) row[k] += b * p2[k];
                    idx += n;
                }
            }
        }
    }
}

}  // namespace detail

// E g (z) = INT e^{i z . xi} g(xi) dsigma_r(xi) on every grid point.
inline Field extension_sphere(const SphereDensity& g, const GridSpec& grid) {
    if (grid.dim != g.n) throw std::invalid_argument("extension_sphere: grid dim != n");
    for (int a = 0; a < grid.dim; ++a)
        if (grid.points_per_axis < 4.0 * g.radius * grid.half_width[a] / std::numbers::pi)
            throw ResolutionError("extension_sphere: grid cannot resolve oscillation r*L");
    Field out(grid, Side::space);
    detail::accumulate_extension(out, sphere_nodes(g));
    return out;
}

// Pointwise evaluation (small point sets, exact phase per point).
inline cplx extension_sphere_at(const SphereDensity& g, const Vec3& z) {
    cplx acc{0.0, 0.0};
    for (const SurfaceNode& nd : sphere_nodes(g))
        acc += nd.weight * std::polar(1.0, z[0] * nd.xi[0] + z[1] * nd.xi[1] + z[2] * nd.xi[2]);
    return acc;
}

// u(x, t) = INT e^{i x.xi + i t phi_m(xi)} f(xi) dxi / phi_m(xi); t is the
// last grid axis.
inline Field extension_hyperboloid(const HyperboloidFunctionRd& F, const GridSpec& grid) {
    if (grid.dim != F.d + 1)
        throw std::invalid_argument("extension_hyperboloid: grid dim != d+1");
    check_support_radius(F);
    for (int a = 0; a < F.d; ++a)
        if (grid.points_per_axis < 4.0 * F.support_radius * grid.half_width[a] / std::numbers::pi)
            throw ResolutionError("extension_hyperboloid: grid cannot resolve R_f");
    Field out(grid, Side::space);
    detail::accumulate_extension(out, hyperboloid_nodes(F));
    return out;
}

inline Field extension_paraboloid(const ParaboloidFunctionRd& F, const GridSpec& grid) {
    if (grid.dim != F.d + 1)
        throw std::invalid_argument("extension_paraboloid: grid dim != d+1");
    check_support_radius(F);
    for (int a = 0; a < F.d; ++a)
        if (grid.points_per_axis < 4.0 * F.support_radius * grid.half_width[a] / std::numbers::pi)
            throw ResolutionError("extension_paraboloid: grid cannot resolve R_f");
    Field out(grid, Side::space);
    detail::accumulate_extension(out, paraboloid_nodes(F));
    return out;
}

inline cplx extension_hyperboloid_at(const HyperboloidFunctionRd& F, const Vec3& z) {
    cplx acc{0.0, 0.0};
    const int d = F.d;
    for (const SurfaceNode& nd : hyperboloid_nodes(F)) {
        double ph = z[d] * nd.xi[d];
        for (int a = 0; a < d; ++a) ph += z[a] * nd.xi[a];
        acc += nd.weight * std::polar(1.0, ph);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// k-plane transform
// ---------------------------------------------------------------------------

// Integration subspace pi and output coordinates, per frame convention:
//   k = dim-1 : pi = span(basis_perp); the output variable s runs along omega
//               (Radon convention R(omega, s)).
//   k = 1, dim = 3 : pi = the line spanned by omega; output over basis_perp.
// Output Field reuses the input point count; output axis j inherits the
// half-width of the input axis most aligned with its direction.
inline Field kplane_transform(const Field& F, const Frame& frame, int k,
                              double boundary_guard = 1e-6) {
    const int dim = F.grid.dim;
    if (k < 1 || k > dim - 1) throw std::domain_error("kplane_transform: need 1 <= k <= dim-1");
    if (F.side != Side::space) throw std::invalid_argument("kplane_transform: space side expected");

    // Boundary decay guard.
    if (boundary_guard > 0.0) {
        const int n = F.grid.points_per_axis;
        double bmax = 0.0;
        const double fmax = F.max_abs();
        detail::for_each_index(dim, n, [&](int i0, int i1, int i2) {
            const bool edge = i0 == 0 || i0 == n - 1 ||
                              (dim > 1 && (i1 == 0 || i1 == n - 1)) ||
                              (dim > 2 && (i2 == 0 || i2 == n - 1));
            if (edge) bmax = std::max(bmax, std::abs(F.at(i0, i1, i2)));
        });
        if (bmax > boundary_guard * fmax)
            throw TruncationError("kplane_transform: field does not decay at the grid boundary");
    }

    // Integration directions and output directions.
    std::vector<Vec3> integ, outdir;
    if (k == dim - 1) {
        for (int j = 0; j < dim - 1; ++j) integ.push_back(frame.basis_perp[j]);
        outdir.push_back(frame.omega);
    } else {  // k == 1, dim == 3
        integ.push_back(frame.omega);
        outdir.push_back(frame.basis_perp[0]);
        outdir.push_back(frame.basis_perp[1]);
    }

    // Axis alignment detection.
    auto axis_of = [&](const Vec3& v) -> int {
        for (int a = 0; a < dim; ++a)
            if (std::abs(std::abs(v[a]) - 1.0) < 1e-12) return a;
        return -1;
    };
    bool aligned = true;
    for (const auto& v : integ)
        if (axis_of(v) < 0) aligned = false;
    for (const auto& v : outdir)
        if (axis_of(v) < 0) aligned = false;

    const int odim = dim - k;
    const int n = F.grid.points_per_axis;
    std::array<double, 3> ohw{1.0, 1.0, 1.0};
    for (int j = 0; j < odim; ++j) {
        const int a = axis_of(outdir[j]);
        ohw[j] = F.grid.half_width[a >= 0 ? a : 0];
    }
    GridSpec og(odim, ohw, n);
    Field out(og, Side::space);

    if (aligned) {
        // Direct sums over the aligned integration axes.
        std::array<int, 3> oaxis{0, 0, 0}, osign{1, 1, 1};
        for (int j = 0; j < odim; ++j) {
            oaxis[j] = axis_of(outdir[j]);
            osign[j] = outdir[j][oaxis[j]] > 0 ? 1 : -1;
        }
        std::array<int, 3> iaxis{-1, -1, -1};
        for (int j = 0; j < k; ++j) iaxis[j] = axis_of(integ[j]);
        double meas = 1.0;
        for (int j = 0; j < k; ++j) meas *= F.grid.spacing(iaxis[j]);
        detail::for_each_index(dim, n, [&](int i0, int i1, int i2) {
            const std::array<int, 3> idx{i0, i1, i2};
            // Output index per output axis, respecting direction sign:
            // coordinate s = coord(a, i) * sign -> index.
            int oi[3] = {0, 0, 0};
            for (int j = 0; j < odim; ++j) {
                int ii = idx[oaxis[j]];
                if (osign[j] < 0) {
                    // Reflected coordinate: -coord(i) = coord(N - i) except at
                    // the -L edge which maps outside; fold modulo N.
                    ii = (n - ii) % n;
                }
                oi[j] = ii;
            }
            out.at(oi[0], oi[1], oi[2]) += F.at(i0, i1, i2) * meas;
        });
    } else {
        SplineField spline(F);
        double diag = 0.0;
        for (int a = 0; a < dim; ++a) diag += F.grid.half_width[a] * F.grid.half_width[a];
        diag = std::sqrt(diag);
        const double h = F.grid.spacing(0);
        const int nt = static_cast<int>(std::ceil(2.0 * diag / h));
        const int n1 = odim > 1 ? n : 1;
        for (int io = 0; io < n; ++io) {
            for (int jo = 0; jo < n1; ++jo) {
                const double s0 = og.coord(0, io);
                const double s1 = odim > 1 ? og.coord(1, jo) : 0.0;
                Vec3 base;
                for (int a = 0; a < 3; ++a)
                    base[a] = s0 * outdir[0][a] + (odim > 1 ? s1 * outdir[1][a] : 0.0);
                cplx acc{0.0, 0.0};
                if (k == 1) {
                    for (int it = 0; it < nt; ++it) {
                        const double t = -diag + (it + 0.5) * (2.0 * diag / nt);
                        double p[3];
                        for (int a = 0; a < dim; ++a) p[a] = base[a] + t * integ[0][a];
                        acc += spline.eval(p);
                    }
                    acc *= 2.0 * diag / nt;
                } else {  // k == 2, dim == 3
                    for (int it = 0; it < nt; ++it) {
                        const double t = -diag + (it + 0.5) * (2.0 * diag / nt);
                        for (int iu = 0; iu < nt; ++iu) {
                            const double u = -diag + (iu + 0.5) * (2.0 * diag / nt);
                            double p[3];
                            for (int a = 0; a < dim; ++a)
                                p[a] = base[a] + t * integ[0][a] + u * integ[1][a];
                            acc += spline.eval(p);
                        }
                    }
                    acc *= (2.0 * diag / nt) * (2.0 * diag / nt);
                }
                out.at(io, jo) = acc;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Plancherel-type identity for the k-plane transform
// ---------------------------------------------------------------------------

struct PlancherelKPlaneResult {
    double lhs = 0.0;  // ||F||_2^2
    double rhs = 0.0;  // (2pi)^{-k}/|G_{n-k-1,n-1}| x Grassmannian integral
    double rel_err = 0.0;
};

inline double field_l2sq(const Field& f) {
    double s = 0.0;
    for (const auto& v : f.values) s += std::norm(v);
    return s * f.grid.cell_volume();
}

// ||(-d^2/ds^2)^{1/4} T||_2^2 for a 1-D field, computed on the frequency side
// as (2pi)^{-1} INT |sigma| |T^(sigma)|^2 dsigma.  The profile is zero-padded
// (pad x wider box, same spacing) to refine the frequency step, and the
// derivative kink of |sigma| at sigma = 0 gets the Euler-Maclaurin endpoint
// correction +(dsigma^2 / 6) |T^(0)|^2, making the quadrature O(dsigma^4).
inline double half_derivative_l2sq_1d(const Field& T, int pad = 4) {
    if (T.grid.dim != 1)
        throw std::domain_error("half_derivative_l2sq_1d: dim must be 1");
    const int n = T.grid.points_per_axis;
    GridSpec gp(1, T.grid.half_width[0] * pad, n * pad);
    Field big(gp, Side::space);
    const int off = (pad - 1) * n / 2;  // same spacing, centered embedding
    for (int i = 0; i < n; ++i) big.at(off + i) = T.at(i);
    Field hat = fourier_forward(big);
    const double dsig = std::numbers::pi / gp.half_width[0];
    double s = 0.0;
    for (int p = 0; p < gp.points_per_axis; ++p)
        s += std::abs(gp.freq(0, p)) * std::norm(hat.at(p));
    s *= dsig;
    s += (dsig * dsig / 6.0) * std::norm(hat.at(gp.points_per_axis / 2));
    return s / (2.0 * std::numbers::pi);
}

// ||d/ds T||_2^2 for a 1-D field via Parseval: (2pi)^{-1} INT sigma^2 |T^|^2.
// The integrand is smooth, so the plain trapezoidal frequency sum suffices.
inline double derivative_l2sq_1d(const Field& T) {
    if (T.grid.dim != 1)
        throw std::domain_error("derivative_l2sq_1d: dim must be 1");
    Field hat = fourier_forward(T);
    const double dsig = std::numbers::pi / T.grid.half_width[0];
    double s = 0.0;
    for (int p = 0; p < T.grid.points_per_axis; ++p) {
        const double sig = T.grid.freq(0, p);
        s += sig * sig * std::norm(hat.at(p));
    }
    return s * dsig / (2.0 * std::numbers::pi);
}

inline PlancherelKPlaneResult plancherel_kplane_check(const Field& F, int k,
                                                      int frame_samples) {
    const int dim = F.grid.dim;
    if (dim != 2 || k != 1)
        throw std::domain_error("plancherel_kplane_check: implemented for dim 2, k 1");
    PlancherelKPlaneResult res;
    res.lhs = field_l2sq(F);
    // Directions on the half-circle; the Grassmannian G_{1,2} has measure pi.
    double acc = 0.0;
    for (int j = 0; j < frame_samples; ++j) {
        const double th = std::numbers::pi * j / frame_samples;
        Frame fr = Frame::from_direction(2, Vec3{std::cos(th), std::sin(th), 0.0});
        Field T = kplane_transform(F, fr, 1);
        acc += half_derivative_l2sq_1d(T);
    }
    acc *= std::numbers::pi / frame_samples;  // Grassmannian measure
    const double gvol = (dim - k - 1 == 0) ? 1.0 : grassmannian_volume(dim - k - 1, dim - 1);
    res.rhs = std::pow(2.0 * std::numbers::pi, -k) / gvol * acc;
    res.rel_err = std::abs(res.lhs - res.rhs) / std::max(std::abs(res.rhs), 1e-14);
    return res;
}

// ---------------------------------------------------------------------------
// Klein-Gordon propagator
// ---------------------------------------------------------------------------

// e^{i t sqrt(m^2 - Laplacian)} f on an (x, t) grid (t = last axis), via the
// frequency multiplier e^{i t phi_m(xi)} per time slice.
inline Field klein_gordon_multiplier_path(const std::function<cplx(const Vec2&)>& f,
                                          double m, const GridSpec& grid) {
    const int d = grid.dim - 1;
    if (d < 1 || d > 2) throw std::domain_error("klein_gordon: d must be 1 or 2");
    GridSpec gx(d, {grid.half_width[0], grid.half_width[1], grid.half_width[2]},
                grid.points_per_axis);
    Field f0(gx, Side::space);
    const int n = grid.points_per_axis;
    detail::for_each_index(d, n, [&](int i0, int i1, int) {
        const Vec2 x{gx.coord(0, i0), d > 1 ? gx.coord(1, i1) : 0.0};
        f0.at(i0, i1) = f(x);
    });
    Field fh = fourier_forward(f0);
    Field out(grid, Side::space);
    for (int it = 0; it < n; ++it) {
        const double t = grid.coord(d, it);
        Field slice = fh;
        detail::for_each_index(d, n, [&](int i0, int i1, int) {
            const double u = gx.freq(0, i0);
            const double v = d > 1 ? gx.freq(1, i1) : 0.0;
            slice.at(i0, i1) *= std::polar(1.0, t * std::sqrt(m * m + u * u + v * v));
        });
        Field st = fourier_inverse(slice);
        detail::for_each_index(d, n, [&](int i0, int i1, int) {
            if (d == 1)
                out.at(i0, it) = st.at(i0);
            else
                out.at(i0, i1, it) = st.at(i0, i1);
        });
    }
    return out;
}

// Same propagator through the hyperboloid extension of the lift of
// f^ . phi_m: u(x,t) = (2pi)^{-d} E[ f^(-xi) phi_m(xi) ](x, t).
inline Field klein_gordon_extension_path(const std::function<cplx(const Vec2&)>& f,
                                         double m, const GridSpec& grid,
                                         double band_radius) {
    const int d = grid.dim - 1;
    if (d < 1 || d > 2) throw std::domain_error("klein_gordon: d must be 1 or 2");
    GridSpec gx(d, {grid.half_width[0], grid.half_width[1], grid.half_width[2]},
                grid.points_per_axis);
    const int n = grid.points_per_axis;
    // Sample f on a pad-times wider box (same spacing): the zero padding
    // refines the frequency sampling so the spline interpolation of f^ below
    // stays well under the two-path agreement tolerance.
    const int pad = 4;
    GridSpec gp(d, {gx.half_width[0] * pad, gx.half_width[1] * pad, 1.0}, n * pad);
    Field f0(gp, Side::space);
    detail::for_each_index(d, n * pad, [&](int i0, int i1, int) {
        const Vec2 x{gp.coord(0, i0), d > 1 ? gp.coord(1, i1) : 0.0};
        f0.at(i0, i1) = f(x);
    });
    Field fh = fourier_forward(f0);
    // Interpolate f^ off the frequency grid. Reinterpret the frequency field
    // as a space-side field on the frequency box for spline purposes.
    Field fh_as_space = fh;
    fh_as_space.side = Side::space;
    for (int a = 0; a < d; ++a)
        fh_as_space.grid.half_width[a] =
            (n * pad / 2) * std::numbers::pi / gp.half_width[a];
    SplineField spline(fh_as_space);
    HyperboloidFunctionRd lift;
    lift.mass = m;
    lift.d = d;
    lift.support_radius = band_radius;
    lift.f = [&spline, m, d](const Vec2& xi) -> cplx {
        double p[2] = {-xi[0], d > 1 ? -xi[1] : 0.0};
        return spline.eval(p) * phi_m(m, norm2(xi));
    };
    lift.nradial = 240;
    lift.nangular = 200;
    Field out = extension_hyperboloid(lift, grid);
    const double scale = std::pow(2.0 * std::numbers::pi, -d);
    for (auto& v : out.values) v *= scale;
    return out;
}

// ---------------------------------------------------------------------------
// CSV dump
// ---------------------------------------------------------------------------

inline void dump_field_csv(const Field& f, std::ostream& os) {
    const int dim = f.grid.dim;
    for (int a = 0; a < dim; ++a) os << "x" << a << ",";
    os << "re,im\n";
    const int n = f.grid.points_per_axis;
    char buf[64];
    detail::for_each_index(dim, n, [&](int i0, int i1, int i2) {
        const std::array<int, 3> idx{i0, i1, i2};
        for (int a = 0; a < dim; ++a) {
            const double c = (f.side == Side::space) ? f.grid.coord(a, idx[a])
                                                     : f.grid.freq(a, idx[a]);
            std::snprintf(buf, sizeof buf, "%.17g,", c);
            os << buf;
        }
        const cplx v = f.at(i0, i1, i2);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", v.real(), v.imag());
        os << buf;
    });
}

}  // namespace exid
