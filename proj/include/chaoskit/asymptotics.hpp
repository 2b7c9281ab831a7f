#pragma once

#include <vector>

namespace chaoskit {

/// Z_{N,k} = sum_l {sum_{i=l}^N dt/t_i^{k/2}}^2 {t_l^k - t_{l-1}^k - k dt t_{l-1}^{k-1}},
/// evaluated in ratio form (no overflow in k), O(N). Conventions
/// t_0 = 0 and t_0^0 = 1. Uniformly bounded by 9T^2/N.
double z_nk(int N, int k, double T);

struct OccupationError {
    double value = 0.0;       // sum_{k=2}^{k_max} Z_{N,k} a_k^2 (odd k only; even vanish)
    double tail_bound = 0.0;  // sum_{k>k_max} (9T^2/N) a_k^2, rigorous
};

/// ||1-Mart.Err||^2 of the discretized occupation time, via the exact
/// per-level identity with the Heaviside profile.
OccupationError occupation_error_norm(int N, double T, long long k_max);

/// Finite-dimensionality index alpha_{N,n} = N^n sup_l A_l /
/// sum_l A_l {l^n - (l-1)^n}, with the zero convention when the
/// denominator vanishes. Computed scale-free as sup A / sum A_l w_l,
/// w_l = (l/N)^n - ((l-1)/N)^n.
double alpha_index(const std::vector<double>& A, int n);

/// Occupation A_l in the cancelled form (sum_{i=l}^N i^{-n/2})^2; the
/// common factor (2 pi n)^{-1} H_{n-1}(0)^2 drops out of alpha.
std::vector<double> occupation_A(int N, int n);

/// Literal occupation A_l including the (2 pi n)^{-1} H_{n-1}(0)^2
/// factor; identically zero for even n (H_{odd}(0) = 0), which makes
/// alpha_index return 0 by the zero convention.
std::vector<double> occupation_A_literal(int N, int n);

struct RatePoint {
    long long N = 0;
    double err_sq = 0.0;
    double tail_bound = 0.0;
};

struct ErrorReport {
    std::vector<RatePoint> points;  // sorted by N
    // primary fit: largest (geometric) half of the N range
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
    // full-range fit, reported alongside
    double slope_full = 0.0;
    double intercept_full = 0.0;
    double max_residual_full = 0.0;
};

/// OLS of log sqrt(err_sq) against log N. Requires >= 3 points with
/// distinct N and err_sq > 0.
ErrorReport rate_fit(std::vector<RatePoint> points);

} // namespace chaoskit
