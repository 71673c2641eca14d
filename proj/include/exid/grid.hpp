#pragma once
// Uniform Cartesian grids and complex-valued sampled fields.

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace exid {

using cplx = std::complex<double>;

enum class Side { space, frequency };

// Uniform grid over the box prod_a [-L_a, L_a), N points per axis.
// Point i on axis a sits at -L_a + i * spacing(a); the right endpoint is
// excluded (periodic/FFT convention).
struct GridSpec {
    int dim = 2;
    std::array<double, 3> half_width{10.0, 10.0, 10.0};
    int points_per_axis = 256;

    GridSpec() = default;
    GridSpec(int d, double L, int n) : dim(d), points_per_axis(n) {
        half_width = {L, L, L};
        validate();
    }
    GridSpec(int d, std::array<double, 3> L, int n)
        : dim(d), half_width(L), points_per_axis(n) {
        validate();
    }

    void validate() const {
        if (dim < 1 || dim > 3) throw std::invalid_argument("GridSpec: dim must be 1..3");
        if (points_per_axis < 8) throw std::invalid_argument("GridSpec: points_per_axis >= 8");
        for (int a = 0; a < dim; ++a)
            if (half_width[a] <= 0.0) throw std::invalid_argument("GridSpec: half_width > 0");
    }

    double spacing(int axis) const { return 2.0 * half_width[axis] / points_per_axis; }
    // Coordinate of point i on an axis (space side).
    double coord(int axis, int i) const { return -half_width[axis] + i * spacing(axis); }
    // Frequency of bin i on an axis, stored in monotone (fftshifted) order:
    // freq(axis, i) = (i - N/2) * pi / L_a.
    double freq(int axis, int i) const {
        return (i - points_per_axis / 2) * 3.14159265358979323846 / half_width[axis];
    }
    std::size_t size() const {
        std::size_t n = 1;
        for (int a = 0; a < dim; ++a) n *= static_cast<std::size_t>(points_per_axis);
        return n;
    }
    double cell_volume() const {
        double v = 1.0;
        for (int a = 0; a < dim; ++a) v *= spacing(a);
        return v;
    }
};

struct Field {
    GridSpec grid;
    Side side = Side::space;
    std::vector<cplx> values;
    // Set when a singular multiplier zeroed the DC node (see apply_radial_multiplier).
    bool zero_mode_dropped = false;

    Field() = default;
    Field(const GridSpec& g, Side s) : grid(g), side(s), values(g.size(), cplx{0.0, 0.0}) {}

    // Row-major flat index; unused trailing indices must be 0.
    std::size_t index(int i0, int i1 = 0, int i2 = 0) const {
        const int n = grid.points_per_axis;
        std::size_t idx = static_cast<std::size_t>(i0);
        if (grid.dim > 1) idx = idx * n + i1;
        if (grid.dim > 2) idx = idx * n + i2;
        return idx;
    }
    cplx& at(int i0, int i1 = 0, int i2 = 0) { return values[index(i0, i1, i2)]; }
    const cplx& at(int i0, int i1 = 0, int i2 = 0) const { return values[index(i0, i1, i2)]; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : values) m = std::max(m, std::abs(v));
        return m;
    }
};

}  // namespace exid
