#pragma once
// 1-D quadrature rules: Gauss-Legendre and periodic trapezoid.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace exid {

enum class QuadKind { gauss_legendre, periodic_trapezoid };

struct QuadratureRule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
    QuadKind kind;
};

// Gauss-Legendre nodes/weights on [a,b] via Newton iteration on P_n.
inline QuadratureRule1D gauss_legendre(int n, double a, double b) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    QuadratureRule1D rule;
    rule.kind = QuadKind::gauss_legendre;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess for the i-th root of P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Evaluate P_n(x) by recurrence; pp = P_n'(x).
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.nodes[i] = mid - half * x;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[i] = half * w;
        rule.weights[n - 1 - i] = half * w;
    }
    return rule;
}

// Equal-weight rule for periodic integrands on [0, 2*pi).
inline QuadratureRule1D periodic_trapezoid(int n) {
    if (n < 1) throw std::invalid_argument("periodic_trapezoid: n must be >= 1");
    QuadratureRule1D rule;
    rule.kind = QuadKind::periodic_trapezoid;
    rule.nodes.resize(n);
    rule.weights.assign(n, 2.0 * std::numbers::pi / n);
    for (int i = 0; i < n; ++i) rule.nodes[i] = 2.0 * std::numbers::pi * i / n;
    return rule;
}

// Surface area of the unit sphere S^k embedded in R^{k+1}.
inline double sphere_area(int k) {
    if (k < 0) throw std::invalid_argument("sphere_area: k must be >= 0");
    const double p = std::numbers::pi;
    return 2.0 * std::pow(p, 0.5 * (k + 1)) / std::tgamma(0.5 * (k + 1));
}

}  // namespace exid
