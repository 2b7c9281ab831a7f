#pragma once

#include <vector>

namespace chaoskit {

/// Gauss-Hermite rule against the standard Gaussian weight
/// e^{-x^2/2}/sqrt(2*pi); weights sum to 1.
struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;    // strictly increasing, symmetric about 0
    std::vector<double> weights;  // positive

    template <class F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (int i = 0; i < order; ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

/// H_n(x), the orthonormal probabilists' Hermite polynomial
/// (He_n / sqrt(n!)), by the three-term recurrence
/// sqrt(n+1) H_{n+1}(x) = x H_n(x) - sqrt(n) H_{n-1}(x).
double hermite_eval(int n, double x);

/// Fills out[0..n_max] with H_0(x)..H_{n_max}(x) in one recurrence pass.
void hermite_fill(int n_max, double x, double* out);

/// H_n'(x) = sqrt(n) H_{n-1}(x).
double hermite_deriv(int n, double x);

/// Nodes are the roots of He_order, found by Newton iteration with
/// interlacing brackets; throws std::runtime_error if a root does not
/// converge to 1e-13.
QuadratureRule gauss_hermite_rule(int order);

} // namespace chaoskit
