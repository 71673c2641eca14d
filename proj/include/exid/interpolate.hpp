#pragma once
// Separable cubic B-spline interpolation on uniform grids (zero-extended
// outside). Coefficients are obtained by solving the tridiagonal system
// (c_{i-1} + 4 c_i + c_{i+1})/6 = f_i per grid line.

#include <vector>

#include "grid.hpp"

namespace exid {

namespace detail {

// Solve the (1/6, 4/6, 1/6) tridiagonal system along one line (stride
// access), zero boundary coefficients.
inline void spline_filter_line(cplx* data, int n, std::size_t stride,
                               std::vector<cplx>& scratch, std::vector<double>& cprime) {
    // Thomas algorithm with constant coefficients a = c = 1/6, b = 4/6.
    const double a = 1.0 / 6.0, b = 4.0 / 6.0;
    if (cprime.size() != static_cast<std::size_t>(n)) cprime.resize(n);
    scratch.resize(n);
    double beta = b;
    cprime[0] = a / beta;
    scratch[0] = data[0] / beta;
    for (int i = 1; i < n; ++i) {
        beta = b - a * cprime[i - 1];
        cprime[i] = a / beta;
        scratch[i] = (data[static_cast<std::size_t>(i) * stride] - a * scratch[i - 1]) / beta;
    }
    data[static_cast<std::size_t>(n - 1) * stride] = scratch[n - 1];
    for (int i = n - 2; i >= 0; --i)
        data[static_cast<std::size_t>(i) * stride] =
            scratch[i] - cprime[i] * data[static_cast<std::size_t>(i + 1) * stride];
}

inline void bspline_weights(double t, double w[4]) {
    const double t2 = t * t, t3 = t2 * t;
    w[0] = (1.0 - 3.0 * t + 3.0 * t2 - t3) / 6.0;
    w[1] = (4.0 - 6.0 * t2 + 3.0 * t3) / 6.0;
    w[2] = (1.0 + 3.0 * t + 3.0 * t2 - 3.0 * t3) / 6.0;
    w[3] = t3 / 6.0;
}

}  // namespace detail

// Prefiltered spline representation of a Field (space side).
class SplineField {
  public:
    explicit SplineField(const Field& f) : grid_(f.grid), coef_(f.values) {
        const int n = grid_.points_per_axis;
        const int dim = grid_.dim;
        std::vector<cplx> scratch;
        std::vector<double> cprime;
        // Filter along each axis in turn.
        const std::size_t total = coef_.size();
        for (int axis = 0; axis < dim; ++axis) {
            std::size_t stride = 1;
            for (int a = axis + 1; a < dim; ++a) stride *= n;
            const std::size_t nlines = total / n;
            for (std::size_t line = 0; line < nlines; ++line) {
                // Compute the base offset of this line.
                std::size_t rem = line, base = 0, mul = 1;
                // Lines enumerate all indices with the filtered axis = 0.
                // Build base by distributing rem over the other axes.
                std::size_t strides[3], sizes[3];
                int cnt = 0;
                for (int a = dim - 1; a >= 0; --a) {
                    std::size_t s = 1;
                    for (int b = a + 1; b < dim; ++b) s *= n;
                    if (a == axis) continue;
                    strides[cnt] = s;
                    sizes[cnt] = n;
                    ++cnt;
                }
                for (int c = 0; c < cnt; ++c) {
                    base += (rem % sizes[c]) * strides[c];
                    rem /= sizes[c];
                }
                (void)mul;
                detail::spline_filter_line(coef_.data() + base, n, stride, scratch, cprime);
            }
        }
    }

    // Evaluate at physical coordinates (length = dim); zero outside the grid.
    cplx eval(const double* x) const {
        const int n = grid_.points_per_axis;
        const int dim = grid_.dim;
        double w[3][4];
        int i0[3];
        for (int a = 0; a < dim; ++a) {
            const double u = (x[a] + grid_.half_width[a]) / grid_.spacing(a);
            if (u < -1.0 || u > n + 1.0) return {0.0, 0.0};
            const double fl = std::floor(u);
            i0[a] = static_cast<int>(fl) - 1;
            detail::bspline_weights(u - fl, w[a]);
        }
        cplx acc{0.0, 0.0};
        if (dim == 1) {
            for (int p = 0; p < 4; ++p) {
                const int i = i0[0] + p;
                if (i < 0 || i >= n) continue;
                acc += w[0][p] * coef_[static_cast<std::size_t>(i)];
            }
        } else if (dim == 2) {
            for (int p = 0; p < 4; ++p) {
                const int i = i0[0] + p;
                if (i < 0 || i >= n) continue;
                cplx row{0.0, 0.0};
                const std::size_t base = static_cast<std::size_t>(i) * n;
                for (int q = 0; q < 4; ++q) {
                    const int j = i0[1] + q;
                    if (j < 0 || j >= n) continue;
                    row += w[1][q] * coef_[base + j];
                }
                acc += w[0][p] * row;
            }
        } else {
            for (int p = 0; p < 4; ++p) {
                const int i = i0[0] + p;
                if (i < 0 || i >= n) continue;
                cplx plane{0.0, 0.0};
                for (int q = 0; q < 4; ++q) {
                    const int j = i0[1] + q;
                    if (j < 0 || j >= n) continue;
                    cplx row{0.0, 0.0};
                    const std::size_t base =
                        (static_cast<std::size_t>(i) * n + j) * static_cast<std::size_t>(n);
                    for (int s = 0; s < 4; ++s) {
                        const int l = i0[2] + s;
                        if (l < 0 || l >= n) continue;
                        row += w[2][s] * coef_[base + l];
                    }
                    plane += w[1][q] * row;
                }
                acc += w[0][p] * plane;
            }
        }
        return acc;
    }

  private:
    GridSpec grid_;
    std::vector<cplx> coef_;
};

}  // namespace exid
