#pragma once

#include <cstdint>
#include <vector>

#include "chaoskit/functional.hpp"
#include "chaoskit/spectrum.hpp"

namespace chaoskit {

/// Inverse standard normal CDF (Wichura's AS 241, double precision).
double normal_icdf(double p);

/// Counter-based deterministic generator: the value at (sample,
/// stream) depends only on (seed, sample, stream), so any evaluation
/// order — including parallel — reproduces the same draws bit-exactly.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    double uniform(std::uint64_t sample, std::uint64_t stream) const {
        std::uint64_t h = mix(seed_ + 0x9E3779B97F4A7C15ULL);
        h = mix(h ^ (sample * 0xBF58476D1CE4E5B9ULL + 0x2545F4914F6CDD1DULL));
        h = mix(h ^ (stream * 0x94D049BB133111EBULL + 0xDA942042E4DD58B5ULL));
        return double(h >> 11) * 0x1.0p-53 + 0x1.0p-54;  // strictly inside (0,1)
    }

    double normal(std::uint64_t sample, std::uint64_t stream) const {
        return normal_icdf(uniform(sample, stream));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {  // splitmix64 finalizer
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }
    std::uint64_t seed_;
};

/// Row-major M x cols matrix of scaled representation errors;
/// column p holds (dt)^{-p/2} Err_N(p).
struct SampleMatrix {
    long long M = 0;
    int cols = 0;
    double dt = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> data;

    double at(long long row, int col) const { return data[std::size_t(row) * cols + col]; }
    double& at(long long row, int col) { return data[std::size_t(row) * cols + col]; }
};

/// Draws M paths of i.i.d. N(0, dt) increments (counter RNG keyed by
/// (seed, sample, increment)) and evaluates the scaled errors
/// (dt)^{-p/2} Err_N(p), p = 0..p_max, with conditional integrands from
/// the Gaussian smoothing identity. Terminal payoffs only; other
/// functionals go through sample_errors_from_spectrum.
SampleMatrix sample_errors(const Payoff& payoff, const TimeGrid& grid, int p_max, long long M,
                           std::uint64_t seed);

/// Same sampling, with Err_N(p) = evaluate(x) - partial_sum_eval(x, p);
/// feasible for small-N spectra of any functional.
SampleMatrix sample_errors_from_spectrum(const ChaosSpectrum& x, int p_max, long long M,
                                         std::uint64_t seed);

/// Variance of the limiting stochastic integral (1/sqrt((p+1)!)) int_0^T
/// E[D_t^{p+1} X | F_t] dB_t^p, i.e. (1/(p+1)!) int_0^T E[(E[D^{p+1}X|F_t])^2] dt.
/// The time integral is trapezoidal; the t -> T endpoint is handled by a
/// one-sided power-law limit and flagged divergent when not integrable.
struct LimitVariance {
    double value = 0.0;
    double endpoint_tail = 0.0;  // mass attributed to the last subinterval
    bool divergent = false;      // variance infinite (irregular payoff)
};
LimitVariance limit_variance(const Payoff& payoff, double T, int p, int grid_points = 257,
                             int quad_order = 64);

struct CltLevel {
    double sample_var = 0.0;
    double se = 0.0;        // jackknife SE of the sample variance
    double limit_var = 0.0;
    double z = 0.0;         // (sample_var - limit_var)/se; NaN when degenerate
    bool degenerate = false;
    bool limit_divergent = false;
};

struct CltCross {
    int p = 0, q = 0;
    double cov = 0.0;  // covariance of the Hermite-level contributions C_p, C_q
    double se = 0.0;
    double z = 0.0;
};

struct CltReport {
    long long M = 0;
    std::uint64_t seed = 0;
    double dt = 0.0;
    std::vector<CltLevel> levels;
    std::vector<CltCross> cross;  // pairs p < q <= cols-2
};

/// Scores sample variances against the limit variances and the pairwise
/// cross-covariances of the Hermite-level contributions
/// C_p = col_p - sqrt(dt) col_{p+1} (exactly uncorrelated across p).
/// limits[p] < 0 or NaN marks a divergent limit (level not scored).
CltReport clt_report(const SampleMatrix& samples, const std::vector<double>& limits);

/// Second-moment check of the scaled-walk Brownian limit: variance,
/// jackknife SE and kurtosis of sqrt(dt) L^{p,N}_T = sqrt(dt) sum_l
/// H_{p+1}(dW_l/sqrt(dt)); the variance converges to T.
struct WalkStats {
    double var = 0.0;
    double se = 0.0;
    double kurtosis = 0.0;
    double kurtosis_se = 0.0;
};
WalkStats scaled_walk_stats(const TimeGrid& grid, int p, long long M, std::uint64_t seed);

} // namespace chaoskit
