#include "chaoskit/functionals.hpp"

#include <cmath>
#include <stdexcept>

#include "chaoskit/accum.hpp"
#include "chaoskit/hermite.hpp"

namespace chaoskit {

namespace {

constexpr double kIndexBudget = 1e8;

OneDimCoeffs quadrature_profile(const std::function<double(double)>& payoff, double T, int n_max,
                                int order) {
    QuadratureRule rule = gauss_hermite_rule(order);
    std::vector<double> htab(std::size_t(n_max + 1) * order);
    std::vector<double> col(n_max + 1);
    const double sT = std::sqrt(T);
    std::vector<double> fval(order);
    for (int j = 0; j < order; ++j) {
        hermite_fill(n_max, rule.nodes[j], col.data());
        for (int n = 0; n <= n_max; ++n) htab[std::size_t(n) * order + j] = col[n];
        fval[j] = payoff(sT * rule.nodes[j]);
    }
    OneDimCoeffs out;
    out.T = T;
    out.a.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        Accumulator acc;
        for (int j = 0; j < order; ++j)
            acc.add(rule.weights[j] * fval[j] * htab[std::size_t(n) * order + j]);
        out.a[n] = acc.value();
    }
    return out;
}

} // namespace

OneDimCoeffs coeffs_1d(const Payoff& payoff, double T, int n_max, int /*quad_order*/) {
    if (!(T > 0.0)) throw std::invalid_argument("coeffs_1d: T must be > 0");
    if (n_max < 0) throw std::invalid_argument("coeffs_1d: n_max must be >= 0");
    OneDimCoeffs out;
    out.T = T;
    out.a.resize(n_max + 1);

    if (payoff.kind == Payoff::Kind::heaviside) {
        // a_0 = 1/2, a_k = H_{k-1}(0)/sqrt(2 pi k); even k >= 2 vanish
        out.a[0] = 0.5;
        HeavisideTailIterator it;
        int sign = 1;  // H_{2m}(0) carries (-1)^m
        while (it.k() <= n_max) {
            out.a[it.k()] = sign * std::sqrt(it.a_squared());
            sign = -sign;
            it.next();
        }
        HeavisideTailIterator bound;
        while (bound.k() + 2 <= n_max) bound.next();
        // below level 3 fall back to the total-mass bound sum a^2 = 1/4
        out.tail_sq_bound = bound.k() >= 3 ? bound.tail_sq_bound()
                                           : 0.25 - 1.0 / (2.0 * 3.14159265358979323846);
        return out;
    }

    for (int n = 0; n <= n_max; ++n) out.a[n] = smoothed_coeff(payoff, n, 0.0, T);

    switch (payoff.kind) {
        case Payoff::Kind::power:
            // finite expansion: a_n = 0 beyond the exponent
            out.tail_sq_bound = n_max >= int(payoff.param) ? 0.0 : -1.0;
            break;
        case Payoff::Kind::sine: {
            // |a_n| = e^{-T/2} T^{n/2}/sqrt(n!): geometric tail bound
            double nxt = std::exp(-T) * std::pow(T, n_max + 1);
            for (int i = 2; i <= n_max + 1; ++i) nxt /= i;
            double q = T / (n_max + 2);
            out.tail_sq_bound = q < 1.0 ? nxt / (1.0 - q) : -1.0;
            break;
        }
        default:
            out.tail_sq_bound = -1.0;  // call: truncated, no certified tail
            break;
    }
    return out;
}

OneDimCoeffs coeffs_1d_quadrature(const std::function<double(double)>& payoff, double T, int n_max,
                                  int quad_order) {
    if (quad_order < n_max + 1)
        throw std::invalid_argument("coeffs_1d_quadrature: quad_order must be >= n_max + 1");
    OneDimCoeffs lo = quadrature_profile(payoff, T, n_max, quad_order);
    OneDimCoeffs hi = quadrature_profile(payoff, T, n_max, quad_order + 8);
    double scale = 0.0;
    for (double v : hi.a) scale = std::max(scale, std::abs(v));
    const char* msg =
        "coeffs_1d_quadrature: quadrature drifts across orders "
        "(payoff looks non-square-integrable against mu_T)";
    for (int n = 0; n <= n_max; ++n) {
        double drift = std::abs(hi.a[n] - lo.a[n]);
        if (drift > 1e-6 * std::max(scale, 1e-300)) throw std::domain_error(msg);
    }
    // Bessel-side check: the profile can converge while E[F^2] blows up
    auto fsq = [&](double x) {
        double v = payoff(x);
        return v * v;
    };
    double m2_lo = quadrature_profile(fsq, T, 0, quad_order).a[0];
    double m2_hi = quadrature_profile(fsq, T, 0, quad_order + 8).a[0];
    if (std::abs(m2_hi - m2_lo) > 1e-6 * std::max(std::abs(m2_hi), 1e-300))
        throw std::domain_error(msg);
    return hi;
}

double multinomial_sqrt(const MultiIndex& k) {
    int n = k.degree();
    if (n <= 170) {
        // running product of binomials C(s_i, k_i); stays in double range
        double v = 1.0;
        int s = 0;
        for (int ki : k.k) {
            for (int j = 1; j <= ki; ++j) v *= double(s + j) / j;
            s += ki;
        }
        return std::sqrt(v);
    }
    double lg = std::lgamma(double(n) + 1.0);
    for (int ki : k.k) lg -= std::lgamma(double(ki) + 1.0);
    return std::exp(0.5 * lg);
}

ChaosSpectrum terminal_spectrum(const OneDimCoeffs& a, const TimeGrid& grid, int n_max) {
    if (n_max > a.n_max())
        throw std::invalid_argument("terminal_spectrum: n_max exceeds the profile length");
    if (count_multi_indices(grid.N, n_max) > kIndexBudget)
        throw FeasibilityError("terminal_spectrum: multi-index count exceeds 1e8");

    const double log_ratio = std::log(grid.dt() / a.T);
    ChaosSpectrum out(grid, n_max);
    for_each_multi_index(grid.N, n_max, [&](const MultiIndex& k) {
        int n = k.degree();
        double an = a.a[n];
        if (an == 0.0) return;
        double c = multinomial_sqrt(k) * std::exp(0.5 * n * log_ratio) * an;
        if (c != 0.0) out.set(k, c);
    });
    return out;
}

ChaosSpectrum terminal_spectrum(const Payoff& payoff, const TimeGrid& grid, int n_max) {
    return terminal_spectrum(coeffs_1d(payoff, grid.T, n_max), grid, n_max);
}

ChaosSpectrum build_additive(const FunctionalSpec& f, const TimeGrid& grid, int n_max,
                             int quad_order) {
    if (f.kind() != FunctionalSpec::Kind::additive)
        throw std::invalid_argument("build_additive: functional is not additive");
    if (count_multi_indices(grid.N, n_max) > kIndexBudget)
        throw FeasibilityError("build_additive: multi-index count exceeds 1e8");

    const int N = grid.N;
    // b[n][i-1] = E[f(t_i, W_{t_i}) H_n(W_{t_i}/sqrt(t_i))]
    std::vector<std::vector<double>> b(n_max + 1, std::vector<double>(N));
    for (int i = 1; i <= N; ++i) {
        double ti = grid.t(i);
        if (f.has_integrand_fn()) {
            OneDimCoeffs prof = coeffs_1d_quadrature(
                [&](double x) { return f.integrand(ti, x); }, ti, n_max,
                std::max(quad_order, n_max + 1));
            for (int n = 0; n <= n_max; ++n) b[n][i - 1] = prof.a[n];
        } else {
            for (int n = 0; n <= n_max; ++n) b[n][i - 1] = smoothed_coeff(f.payoff(), n, 0.0, ti);
        }
    }

    // suffix[n][l-1] = sum_{i=l}^{N} i^{-n/2} b_n(i)
    std::vector<std::vector<double>> suffix(n_max + 1, std::vector<double>(N + 1, 0.0));
    for (int n = 0; n <= n_max; ++n)
        for (int l = N; l >= 1; --l)
            suffix[n][l - 1] = suffix[n][l] + std::pow(double(l), -0.5 * n) * b[n][l - 1];

    const double dt = grid.dt();
    ChaosSpectrum out(grid, n_max);
    for_each_multi_index(N, n_max, [&](const MultiIndex& k) {
        int n = k.degree();
        int L = std::max(1, k.trailing());
        double c = dt * multinomial_sqrt(k) * suffix[n][L - 1];
        if (c != 0.0) out.set(k, c);
    });
    return out;
}

} // namespace chaoskit
