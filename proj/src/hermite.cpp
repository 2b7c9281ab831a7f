#include "chaoskit/hermite.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chaoskit {

double hermite_eval(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_eval: n must be >= 0");
    double hm = 1.0;  // H_0
    if (n == 0) return hm;
    double h = x;  // H_1
    for (int k = 1; k < n; ++k) {
        double hp = (x * h - std::sqrt(double(k)) * hm) / std::sqrt(double(k + 1));
        hm = h;
        h = hp;
    }
    return h;
}

void hermite_fill(int n_max, double x, double* out) {
    out[0] = 1.0;
    if (n_max == 0) return;
    out[1] = x;
    for (int k = 1; k < n_max; ++k)
        out[k + 1] = (x * out[k] - std::sqrt(double(k)) * out[k - 1]) / std::sqrt(double(k + 1));
}

double hermite_deriv(int n, double x) {
    if (n == 0) return 0.0;
    return std::sqrt(double(n)) * hermite_eval(n - 1, x);
}

namespace {

// Safeguarded Newton for a root of H_order sign-bracketed by (lo, hi).
double refine_root(int order, double x, double lo, double hi) {
    const double tol = 1e-13;
    bool lo_positive = hermite_eval(order, lo) > 0.0;
    for (int it = 0; it < 200; ++it) {
        double f = hermite_eval(order, x);
        double df = hermite_deriv(order, x);
        double xn = (df != 0.0) ? x - f / df : 0.5 * (lo + hi);
        if (xn <= lo || xn >= hi) xn = 0.5 * (lo + hi);  // bisect when Newton escapes
        if ((hermite_eval(order, xn) > 0.0) == lo_positive)
            lo = xn;
        else
            hi = xn;
        if (std::abs(xn - x) <= tol * std::max(1.0, std::abs(xn))) return xn;
        x = xn;
    }
    throw std::runtime_error("gauss_hermite_rule: Newton iteration did not converge to 1e-13 at order " +
                             std::to_string(order));
}

} // namespace

QuadratureRule gauss_hermite_rule(int order) {
    if (order < 1) throw std::invalid_argument("gauss_hermite_rule: order must be >= 1");

    // Roots of He_n interlace those of He_{n+1}; walk the degrees up,
    // bracketing each new root between consecutive old ones.
    std::vector<double> roots{0.0};  // He_1
    for (int n = 2; n <= order; ++n) {
        std::vector<double> next(n);
        // outer bound: |root| < sqrt(4n+2) holds comfortably for He_n
        double bound = std::sqrt(4.0 * n + 2.0);
        for (int j = 0; j < n; ++j) {
            double lo = (j == 0) ? -bound : roots[j - 1];
            double hi = (j == n - 1) ? bound : roots[j];
            // initial guess: midpoint-ish, final accuracy comes from Newton
            next[j] = refine_root(n, 0.5 * (lo + hi), lo, hi);
        }
        roots.swap(next);
    }

    // Enforce exact symmetry; odd order pins the middle node to 0.
    for (int j = 0; j < order / 2; ++j) {
        double r = 0.5 * (roots[order - 1 - j] - roots[j]);
        roots[j] = -r;
        roots[order - 1 - j] = r;
    }
    if (order % 2 == 1) roots[order / 2] = 0.0;

    QuadratureRule rule;
    rule.order = order;
    rule.nodes = roots;
    rule.weights.resize(order);

    // Christoffel numbers for the orthonormal basis: at a root x of H_q,
    // sum_{k<q} H_k(x)^2 = q H_{q-1}(x)^2, so w = 1/(q H_{q-1}(x)^2).
    double wsum = 0.0;
    for (int j = 0; j < order; ++j) {
        double h = hermite_eval(order - 1, rule.nodes[j]);
        rule.weights[j] = 1.0 / (order * h * h);
        wsum += rule.weights[j];
    }
    for (double& w : rule.weights) w /= wsum;
    // mirror weights so symmetric integrands cancel exactly
    for (int j = 0; j < order / 2; ++j)
        rule.weights[order - 1 - j] = rule.weights[j];
    return rule;
}

} // namespace chaoskit
