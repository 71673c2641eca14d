#pragma once
// Discrete Fourier transforms with the convention
//   f^(xi) = INT e^{+i z.xi} f(z) dz,   f(z) = (2pi)^{-d} INT e^{-i z.xi} f^(xi) dxi.
// This is the single point where the library's sign convention is mapped onto
// the FFT backend: the +i forward sign corresponds to FFTW_BACKWARD.

#include <fftw3.h>

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "grid.hpp"
#include "quadrature.hpp"

namespace exid {

namespace detail {

// In-place DFT of a row-major dim-dimensional cube, N points per axis.
// sign is FFTW_FORWARD (e^{-i}) or FFTW_BACKWARD (e^{+i}), unnormalized.
inline void raw_dft(std::vector<cplx>& v, int dim, int n, int sign) {
    std::array<int, 3> dims{n, n, n};
    auto* data = reinterpret_cast<fftw_complex*>(v.data());
    fftw_plan plan = fftw_plan_dft(dim, dims.data(), data, data, sign, FFTW_ESTIMATE);
    if (!plan) throw std::runtime_error("fftw plan creation failed");
    fftw_execute(plan);
    fftw_destroy_plan(plan);
}

// Parity sign (-1)^(sum of shifted indices): converts between the DFT's
// 0-based bin order and the monotone frequency order of GridSpec::freq.
inline double shift_sign(int dim, int n, int i0, int i1, int i2) {
    int s = i0 - n / 2;
    if (dim > 1) s += i1 - n / 2;
    if (dim > 2) s += i2 - n / 2;
    return (s & 1) ? -1.0 : 1.0;
}

template <typename F>
inline void for_each_index(int dim, int n, F&& body) {
    const int n1 = dim > 1 ? n : 1;
    const int n2 = dim > 2 ? n : 1;
    for (int i0 = 0; i0 < n; ++i0)
        for (int i1 = 0; i1 < n1; ++i1)
            for (int i2 = 0; i2 < n2; ++i2) body(i0, i1, i2);
}

}  // namespace detail

// f^(xi_p) = h^dim * (-1)^{shift} * BackwardDFT(f)_{p mod N}, frequencies in
// monotone order xi_p = (p - N/2) * pi / L per axis.
inline Field fourier_forward(const Field& f) {
    if (f.side != Side::space) throw std::invalid_argument("fourier_forward: field must be space side");
    const int n = f.grid.points_per_axis;
    const int dim = f.grid.dim;
    std::vector<cplx> buf = f.values;
    detail::raw_dft(buf, dim, n, FFTW_BACKWARD);
    Field out(f.grid, Side::frequency);
    const double vol = f.grid.cell_volume();
    Field tmp(f.grid, Side::frequency);
    detail::for_each_index(dim, n, [&](int i0, int i1, int i2) {
        const int j0 = (i0 + n / 2) % n;
        const int j1 = dim > 1 ? (i1 + n / 2) % n : 0;
        const int j2 = dim > 2 ? (i2 + n / 2) % n : 0;
        out.at(i0, i1, i2) = vol * detail::shift_sign(dim, n, i0, i1, i2) * buf[f.index(j0, j1, j2)];
    });
    return out;
}

inline Field fourier_inverse(const Field& fhat) {
    if (fhat.side != Side::frequency)
        throw std::invalid_argument("fourier_inverse: field must be frequency side");
    const int n = fhat.grid.points_per_axis;
    const int dim = fhat.grid.dim;
    // Undo the monotone ordering and the boundary phase, then e^{-i} DFT.
    std::vector<cplx> buf(fhat.values.size());
    detail::for_each_index(dim, n, [&](int i0, int i1, int i2) {
        const int j0 = (i0 + n / 2) % n;
        const int j1 = dim > 1 ? (i1 + n / 2) % n : 0;
        const int j2 = dim > 2 ? (i2 + n / 2) % n : 0;
        buf[fhat.index(j0, j1, j2)] =
            detail::shift_sign(dim, n, i0, i1, i2) * fhat.at(i0, i1, i2);
    });
    detail::raw_dft(buf, dim, n, FFTW_FORWARD);
    Field out(fhat.grid, Side::space);
    double scale = 1.0;
    for (int a = 0; a < dim; ++a)
        scale *= (std::numbers::pi / fhat.grid.half_width[a]) / (2.0 * std::numbers::pi);
    for (std::size_t i = 0; i < buf.size(); ++i) out.values[i] = scale * buf[i];
    return out;
}

// (-Delta_masked)^{s/2}: multiplies the transform by |xi_mask|^s over the
// selected axes. For s < 0 the zero-frequency node is zeroed and flagged.
inline Field apply_radial_multiplier(const Field& f, double exponent,
                                     std::array<bool, 3> mask = {true, true, true}) {
    if (std::abs(exponent) > 2.0)
        throw std::invalid_argument("apply_radial_multiplier: |exponent| <= 2 required");
    if (f.side != Side::space)
        throw std::invalid_argument("apply_radial_multiplier: field must be space side");
    if (exponent == 0.0) return f;
    Field fh = fourier_forward(f);
    const int n = f.grid.points_per_axis;
    const int dim = f.grid.dim;
    bool dropped = false;
    detail::for_each_index(dim, n, [&](int i0, int i1, int i2) {
        const std::array<int, 3> idx{i0, i1, i2};
        double r2 = 0.0;
        for (int a = 0; a < dim; ++a)
            if (mask[a]) {
                const double x = f.grid.freq(a, idx[a]);
                r2 += x * x;
            }
        cplx& v = fh.at(i0, i1, i2);
        if (r2 == 0.0) {
            if (exponent < 0.0) {
                if (std::abs(v) > 0.0) dropped = true;
                v = 0.0;
            }
            // exponent > 0: |0|^s = 0 multiplies the node away naturally.
            else
                v = 0.0;
        } else {
            v *= std::pow(r2, 0.5 * exponent);
        }
    });
    Field out = fourier_inverse(fh);
    out.zero_mode_dropped = dropped;
    return out;
}

// d/dx along one axis as the frequency multiplier (-i xi_a) for the e^{+i}
// forward convention: f(z) = (2pi)^{-d} INT e^{-iz.xi} f^, so d/dz pulls -i xi.
inline Field derivative_axis(const Field& f, int axis) {
    Field fh = fourier_forward(f);
    const int n = f.grid.points_per_axis;
    detail::for_each_index(f.grid.dim, n, [&](int i0, int i1, int i2) {
        const std::array<int, 3> idx{i0, i1, i2};
        fh.at(i0, i1, i2) *= cplx{0.0, -f.grid.freq(axis, idx[axis])};
    });
    return fourier_inverse(fh);
}

// |G_{k,n}| = (|S^{n-1}| ... |S^{n-k}|) / (|S^{k-1}| ... |S^0|).
inline double grassmannian_volume(int k, int n) {
    if (k < 1 || n < 2 || k > n - 1)
        throw std::domain_error("grassmannian_volume: need 1 <= k <= n-1");
    double num = 1.0, den = 1.0;
    for (int j = n - 1; j >= n - k; --j) num *= sphere_area(j);
    for (int j = k - 1; j >= 0; --j) den *= sphere_area(j);
    return num / den;
}

}  // namespace exid
