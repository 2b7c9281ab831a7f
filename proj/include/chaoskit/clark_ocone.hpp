#pragma once

#include <cmath>
#include <vector>

#include "chaoskit/spectrum.hpp"

namespace chaoskit {

/// 1-D chaos profile of a terminal payoff: a_n = E[F(W_T) H_n(W_T/sqrt(T))].
struct OneDimCoeffs {
    double T = 1.0;
    std::vector<double> a;  // a[0..n_max]

    /// Rigorous bound on sum_{n > n_max} a_n^2, or negative when the
    /// tail is not analytically controlled (result then counts as
    /// truncated, not certified).
    double tail_sq_bound = -1.0;

    int n_max() const { return static_cast<int>(a.size()) - 1; }
};

/// Value and certification of an exact error-norm evaluation.
struct ErrorNorm1d {
    double value = 0.0;       // ||n-Mart.Err||^2 contribution of the kept levels
    double tail_bound = 0.0;  // rigorous bound on the dropped levels
    bool certified = false;   // false means "truncated at n_max, tail unknown"
};

/// Spectrum of E[d_l^m X | G_{l-1}]: coefficient at (k_1,..,k_{l-1},0,..)
/// equals sqrt(m!) dt^{-m/2} c(k_1,..,k_{l-1},m,0,..).
ChaosSpectrum co_integrand(const ChaosSpectrum& x, int l, int m);

/// E[X] + sum_{m=1}^{n} sum_l (dt^{m/2}/sqrt(m!)) E[d_l^m X|G_{l-1}](point)
/// H_m(point_l/sqrt(dt)) — the discrete Clark-Ocone partial sum.
double partial_sum_eval(const ChaosSpectrum& x, int n, const std::vector<double>& point);

/// ||Err_N(n)||^2 = sum { c_k^2 : k != 0 and trailing entry >= n+1 };
/// n = 0 gives the variance.
double error_norm_from_spectrum(const ChaosSpectrum& x, int n);

/// I_{n,N} = 1/n - (1/N) sum_{l=0}^{N-1} (l/N)^{n-1}, the exact
/// per-level error weight (0 < I <= min(1/n, 1/N)).
double error_weight(long long n, long long N);

/// ||1-Mart.Err(F(W_T))||^2 = sum_{n>=2} n I_{n,N} a_n^2, exact for
/// terminal payoffs.
ErrorNorm1d error_norm_1d(const OneDimCoeffs& a, int N);

/// Streaming Heaviside variant: grows the chaos cutoff (doubling from
/// n_start) until the certified tail is below tail_frac * value, capped
/// at n_cap. The Heaviside profile is scale-invariant, so there is no T.
ErrorNorm1d heaviside_error_norm_1d(int N, double tail_frac, long long n_start = 1 << 17,
                                    long long n_cap = 1 << 24);

/// a_k^2 for the Heaviside payoff (a_k = H_{k-1}(0)/sqrt(2 pi k));
/// iterates k = 1, 3, 5, ... with O(1) work per step.
class HeavisideTailIterator {
public:
    long long k() const { return k_; }
    double a_squared() const { return h2_ / (2.0 * 3.14159265358979323846 * k_); }
    void next() {
        k_ += 2;
        // H_{2m}(0)^2 ratio: (2m-1)/(2m) stepping m -> m+1
        h2_ *= double(k_ - 2) / double(k_ - 1);
    }
    /// Rigorous bound on sum over odd k' > k of a_{k'}^2, using the
    /// monotone envelope a_k^2 k^{3/2} (decreasing in odd k).
    double tail_sq_bound() const {
        double c = a_squared() * std::pow(double(k_), 1.5);
        return c / std::sqrt(double(k_ - 1));
    }

private:
    long long k_ = 1;   // odd chaos level
    double h2_ = 1.0;   // H_{k-1}(0)^2
};

} // namespace chaoskit
