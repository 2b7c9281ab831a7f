#include "chaoskit/clt_lab.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "chaoskit/accum.hpp"
#include "chaoskit/clark_ocone.hpp"
#include "chaoskit/gaussian_space.hpp"
#include "chaoskit/hermite.hpp"
#include "chaoskit/parallel.hpp"

namespace chaoskit {

double normal_icdf(double p) {
    // Wichura (1988), algorithm AS 241, routine PPND16.
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("normal_icdf: p must be in (0,1)");
    const double q = p - 0.5;
    if (std::abs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                   1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                 1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                   5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                 4.2313330701600911252e+1) * r + 1.0);
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double x;
    if (r <= 5.0) {
        r -= 1.6;
        x = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
              4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
              2.05319162663775882187e+0) * r + 1.0);
    } else {
        r -= 5.0;
        x = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
              5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
    }
    return q < 0.0 ? -x : x;
}

namespace {
constexpr std::size_t kRowChunk = 4096;
}

SampleMatrix sample_errors(const Payoff& payoff, const TimeGrid& grid, int p_max, long long M,
                           std::uint64_t seed) {
    if (p_max < 0) throw std::invalid_argument("sample_errors: p_max must be >= 0");
    if (M < 1) throw std::invalid_argument("sample_errors: M must be >= 1");

    const int N = grid.N;
    const double dt = grid.dt();
    const double sdt = std::sqrt(dt);
    const double mean = smoothed_coeff(payoff, 0, 0.0, grid.T);

    SampleMatrix out;
    out.M = M;
    out.cols = p_max + 1;
    out.dt = dt;
    out.seed = seed;
    out.data.resize(std::size_t(M) * out.cols);

    CounterRng rng(seed);
    parallel_chunks(std::size_t(M), kRowChunk, [&](std::size_t, std::size_t rb, std::size_t re) {
        std::vector<double> z(N);
        for (std::size_t j = rb; j < re; ++j) {
            double w = 0.0;
            for (int l = 0; l < N; ++l) {
                z[l] = rng.normal(j, std::uint64_t(l));
                w += z[l];
            }
            const double wT = sdt * w;
            double err = payoff(wT) - mean;
            out.at(j, 0) = err;
            double wpart = 0.0;  // W_{t_{l-1}}
            for (int m = 1; m <= p_max; ++m) {
                Accumulator term;
                wpart = 0.0;
                for (int l = 1; l <= N; ++l) {
                    double s = grid.T - grid.t(l - 1);
                    double g = smoothed_coeff(payoff, m, wpart, s);
                    term.add(std::pow(dt / s, 0.5 * m) * g * hermite_eval(m, z[l - 1]));
                    wpart += sdt * z[l - 1];
                }
                err -= term.value();
                out.at(j, m) = err * std::pow(dt, -0.5 * m);
            }
        }
    });
    return out;
}

SampleMatrix sample_errors_from_spectrum(const ChaosSpectrum& x, int p_max, long long M,
                                         std::uint64_t seed) {
    if (p_max < 0) throw std::invalid_argument("sample_errors_from_spectrum: p_max must be >= 0");
    const TimeGrid& grid = x.grid();
    const int N = grid.N;
    const double sdt = std::sqrt(grid.dt());

    SampleMatrix out;
    out.M = M;
    out.cols = p_max + 1;
    out.dt = grid.dt();
    out.seed = seed;
    out.data.resize(std::size_t(M) * out.cols);

    CounterRng rng(seed);
    parallel_chunks(std::size_t(M), kRowChunk, [&](std::size_t, std::size_t rb, std::size_t re) {
        std::vector<double> dw(N);
        for (std::size_t j = rb; j < re; ++j) {
            for (int l = 0; l < N; ++l) dw[l] = sdt * rng.normal(j, std::uint64_t(l));
            double full = evaluate(x, dw);
            for (int p = 0; p <= p_max; ++p)
                out.at(j, p) = (full - partial_sum_eval(x, std::min(p, x.n_max()), dw)) *
                               std::pow(grid.dt(), -0.5 * p);
        }
    });
    return out;
}

namespace {

// 10-point Gauss-Legendre on [-1, 1]
constexpr double kGl10Nodes[5] = {0.1488743389816312, 0.4333953941292472, 0.6794095682990244,
                                  0.8650633666889845, 0.9739065285171717};
constexpr double kGl10Weights[5] = {0.2955242247147529, 0.2692667193099963, 0.2190863625159820,
                                    0.1494513491505806, 0.0666713443086881};

} // namespace

LimitVariance limit_variance(const Payoff& payoff, double T, int p, int grid_points,
                             int quad_order) {
    if (p < 0) throw std::invalid_argument("limit_variance: p must be >= 0");
    if (grid_points < 4) throw std::invalid_argument("limit_variance: grid_points must be >= 4");
    if (quad_order < 1) throw std::invalid_argument("limit_variance: quad_order must be >= 1");

    const int G = grid_points;
    const double h = T / (G - 1);
    const double kInvSqrt2Pi = 0.3989422804014326779;
    double reach = 8.0 * std::sqrt(T) + (payoff.kind == Payoff::Kind::call ? std::abs(payoff.param) : 0.0);

    // f(t) = (T-t)^{-(p+1)} E[ SC(p+1, W_t, T-t)^2 ]. The x-integrand has
    // two scales: the sqrt(t) Gaussian envelope and, for irregular
    // payoffs, a sqrt(s)-wide feature where F is rough. Composite
    // Gauss-Legendre panels no wider than the finer scale resolve both;
    // plain Gauss-Hermite in x misses the feature once s << t.
    auto f = [&](double t) {
        double s = T - t;
        double scale = std::pow(s, -double(p + 1));
        if (t == 0.0) {
            double g = smoothed_coeff(payoff, p + 1, 0.0, s);
            return scale * g * g;
        }
        double width = std::min(std::sqrt(s), std::sqrt(t));
        long long panels =
            std::max<long long>(std::llround(std::ceil(2.0 * reach / width)), quad_order);
        double pw = 2.0 * reach / double(panels);
        Accumulator acc;
        for (long long j = 0; j < panels; ++j) {
            double mid = -reach + (j + 0.5) * pw;
            for (int i = 0; i < 5; ++i) {
                for (double sgn : {-1.0, 1.0}) {
                    double x = mid + sgn * 0.5 * pw * kGl10Nodes[i];
                    double g = smoothed_coeff(payoff, p + 1, x, s);
                    double dens = kInvSqrt2Pi / std::sqrt(t) * std::exp(-0.5 * x * x / t);
                    acc.add(0.5 * pw * kGl10Weights[i] * g * g * dens);
                }
            }
        }
        return scale * acc.value();
    };

    std::vector<double> fv(G - 1);
    for (int j = 0; j <= G - 2; ++j) fv[j] = f(j * h);

    // local power in s = T - t from the last two interior nodes
    double sigma = 0.0;
    if (fv[G - 2] > 0.0 && fv[G - 3] > 0.0)
        sigma = std::log(fv[G - 2] / fv[G - 3]) / std::log(0.5);

    LimitVariance out;
    Accumulator trap;
    for (int j = 0; j + 1 <= G - 2; ++j) trap.add(0.5 * h * (fv[j] + fv[j + 1]));

    if (sigma <= -0.999) {
        out.divergent = true;
        out.value = trap.value();
        out.endpoint_tail = std::numeric_limits<double>::infinity();
    } else if (sigma < -0.01) {
        // integrable power blow-up: int_0^h C s^sigma ds with C pinned at s = h
        out.endpoint_tail = fv[G - 2] * h / (sigma + 1.0);
        out.value = trap.value() + out.endpoint_tail;
    } else {
        double f_end = std::max(0.0, 2.0 * fv[G - 2] - fv[G - 3]);  // one-sided limit
        out.endpoint_tail = 0.5 * h * (fv[G - 2] + f_end);
        out.value = trap.value() + out.endpoint_tail;
    }
    return out;
}

namespace {

// delete-one jackknife SE of the sample variance, on centered data
double jackknife_var_se(const std::vector<double>& c, double s2c) {
    const long long M = static_cast<long long>(c.size());
    std::vector<double> theta(M);
    Accumulator mean_acc;
    for (long long i = 0; i < M; ++i) {
        double ci2 = c[i] * c[i];
        theta[i] = (s2c - ci2 - ci2 / (M - 1)) / (M - 2);
        mean_acc.add(theta[i]);
    }
    double tbar = mean_acc.value() / M;
    Accumulator dev;
    for (long long i = 0; i < M; ++i) dev.add((theta[i] - tbar) * (theta[i] - tbar));
    return std::sqrt(dev.value() * double(M - 1) / M);
}

double jackknife_cov_se(const std::vector<double>& cx, const std::vector<double>& cy, double sxy) {
    const long long M = static_cast<long long>(cx.size());
    std::vector<double> theta(M);
    Accumulator mean_acc;
    for (long long i = 0; i < M; ++i) {
        double pi = cx[i] * cy[i];
        theta[i] = (sxy - pi - pi / (M - 1)) / (M - 2);
        mean_acc.add(theta[i]);
    }
    double tbar = mean_acc.value() / M;
    Accumulator dev;
    for (long long i = 0; i < M; ++i) dev.add((theta[i] - tbar) * (theta[i] - tbar));
    return std::sqrt(dev.value() * double(M - 1) / M);
}

std::vector<double> centered_column(const SampleMatrix& s, int col) {
    std::vector<double> c(s.M);
    Accumulator mean;
    for (long long i = 0; i < s.M; ++i) mean.add(s.at(i, col));
    double mu = mean.value() / s.M;
    for (long long i = 0; i < s.M; ++i) c[i] = s.at(i, col) - mu;
    return c;
}

double sum_sq(const std::vector<double>& c) {
    Accumulator acc;
    for (double v : c) acc.add(v * v);
    return acc.value();
}

} // namespace

CltReport clt_report(const SampleMatrix& samples, const std::vector<double>& limits) {
    if (static_cast<int>(limits.size()) != samples.cols)
        throw std::invalid_argument("clt_report: column count must match limits length");
    if (samples.M < 4) throw std::invalid_argument("clt_report: need at least 4 samples");

    CltReport rep;
    rep.M = samples.M;
    rep.seed = samples.seed;
    rep.dt = samples.dt;

    const long long M = samples.M;
    std::vector<std::vector<double>> cols(samples.cols);
    for (int p = 0; p < samples.cols; ++p) cols[p] = centered_column(samples, p);

    double var_scale = 0.0;
    for (int p = 0; p < samples.cols; ++p)
        var_scale = std::max(var_scale, sum_sq(cols[p]) / (M - 1));

    for (int p = 0; p < samples.cols; ++p) {
        CltLevel lvl;
        double s2 = sum_sq(cols[p]);
        lvl.sample_var = s2 / (M - 1);
        lvl.limit_var = limits[p];
        lvl.limit_divergent = !(limits[p] >= 0.0);
        if (lvl.sample_var <= 1e-20 * std::max(1.0, var_scale)) {
            lvl.degenerate = true;  // flagged, not scored
            lvl.z = std::numeric_limits<double>::quiet_NaN();
        } else {
            lvl.se = jackknife_var_se(cols[p], s2);
            lvl.z = lvl.limit_divergent ? std::numeric_limits<double>::quiet_NaN()
                                        : (lvl.sample_var - lvl.limit_var) / lvl.se;
        }
        rep.levels.push_back(lvl);
    }

    // Hermite-level contributions C_p = col_p - sqrt(dt) col_{p+1}
    const double sdt = std::sqrt(samples.dt);
    std::vector<std::vector<double>> contrib;
    for (int p = 0; p + 1 < samples.cols; ++p) {
        std::vector<double> c(M);
        for (long long i = 0; i < M; ++i) c[i] = cols[p][i] - sdt * cols[p + 1][i];
        contrib.push_back(std::move(c));
    }
    for (int p = 0; p < static_cast<int>(contrib.size()); ++p) {
        for (int q = p + 1; q < static_cast<int>(contrib.size()); ++q) {
            CltCross x;
            x.p = p;
            x.q = q;
            Accumulator sxy;
            for (long long i = 0; i < M; ++i) sxy.add(contrib[p][i] * contrib[q][i]);
            x.cov = sxy.value() / (M - 1);
            x.se = jackknife_cov_se(contrib[p], contrib[q], sxy.value());
            x.z = x.se > 0.0 ? x.cov / x.se : std::numeric_limits<double>::quiet_NaN();
            rep.cross.push_back(x);
        }
    }
    return rep;
}

WalkStats scaled_walk_stats(const TimeGrid& grid, int p, long long M, std::uint64_t seed) {
    if (p < 0) throw std::invalid_argument("scaled_walk_stats: p must be >= 0");
    const int N = grid.N;
    const double sdt = std::sqrt(grid.dt());
    CounterRng rng(seed);

    std::vector<double> v(M);
    parallel_chunks(std::size_t(M), kRowChunk, [&](std::size_t, std::size_t rb, std::size_t re) {
        for (std::size_t j = rb; j < re; ++j) {
            Accumulator walk;
            for (int l = 0; l < N; ++l)
                walk.add(hermite_eval(p + 1, rng.normal(j, std::uint64_t(l))));
            v[j] = sdt * walk.value();
        }
    });

    Accumulator mean;
    for (double x : v) mean.add(x);
    double mu = mean.value() / M;
    for (double& x : v) x -= mu;
    double s2 = sum_sq(v);

    WalkStats out;
    out.var = s2 / (M - 1);
    out.se = jackknife_var_se(v, s2);
    Accumulator m4;
    for (double x : v) m4.add(x * x * x * x);
    double s4 = m4.value();
    double var_b = s2 / M;
    out.kurtosis = (s4 / M) / (var_b * var_b);

    // delete-one jackknife with a fixed center (the mean-shift term is
    // O(1/M) and the levels p >= 1 are heavy-tailed, so the normal-theory
    // sqrt(24/M) would understate the spread)
    std::vector<double> theta(M);
    Accumulator tmean;
    for (long long i = 0; i < M; ++i) {
        double x2 = v[i] * v[i];
        double m2i = (s2 - x2) / (M - 1);
        theta[i] = ((s4 - x2 * x2) / (M - 1)) / (m2i * m2i);
        tmean.add(theta[i]);
    }
    double tbar = tmean.value() / M;
    Accumulator dev;
    for (long long i = 0; i < M; ++i) dev.add((theta[i] - tbar) * (theta[i] - tbar));
    out.kurtosis_se = std::sqrt(dev.value() * double(M - 1) / M);
    return out;
}

} // namespace chaoskit
