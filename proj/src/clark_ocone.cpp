#include "chaoskit/clark_ocone.hpp"

#include <cmath>
#include <stdexcept>

#include "chaoskit/accum.hpp"
#include "chaoskit/gaussian_space.hpp"
#include "chaoskit/hermite.hpp"

namespace chaoskit {

namespace {
double sqrt_factorial(int m) {
    double v = 1.0;
    for (int i = 2; i <= m; ++i) v *= std::sqrt(double(i));
    return v;
}
} // namespace

ChaosSpectrum co_integrand(const ChaosSpectrum& x, int l, int m) {
    const int N = x.grid().N;
    if (l < 1 || l > N) throw std::invalid_argument("co_integrand: l out of range [1, N]");
    if (m < 1) throw std::invalid_argument("co_integrand: m must be >= 1");

    ChaosSpectrum out(x.grid(), std::max(0, x.n_max() - m));
    const double scale = sqrt_factorial(m) * std::pow(x.grid().dt(), -0.5 * m);
    for (const auto& [k, c] : x.coeffs()) {
        if (k.k[l - 1] != m || k.trailing() > l) continue;
        MultiIndex head = k;
        head.k[l - 1] = 0;
        out.set(head, scale * c);
    }
    return out;
}

double partial_sum_eval(const ChaosSpectrum& x, int n, const std::vector<double>& point) {
    if (n < 0 || n > x.n_max())
        throw std::invalid_argument("partial_sum_eval: n out of range [0, n_max]");
    if (static_cast<int>(point.size()) != x.grid().N)
        throw std::invalid_argument("partial_sum_eval: point length != N");

    const double dt = x.grid().dt();
    const double sdt = std::sqrt(dt);
    Accumulator acc;
    acc.add(x.mean());
    for (int m = 1; m <= n; ++m) {
        double coef = std::pow(sdt, m) / sqrt_factorial(m);
        for (int l = 1; l <= x.grid().N; ++l) {
            ChaosSpectrum g = co_integrand(x, l, m);
            if (g.size() == 0) continue;
            acc.add(coef * evaluate(g, point) * hermite_eval(m, point[l - 1] / sdt));
        }
    }
    return acc.value();
}

double error_norm_from_spectrum(const ChaosSpectrum& x, int n) {
    if (n < 0) throw std::invalid_argument("error_norm_from_spectrum: n must be >= 0");
    Accumulator acc;
    for (const auto& [k, c] : x.coeffs())
        if (k.trailing_value() >= n + 1) acc.add(c * c);
    return acc.value();
}

double error_weight(long long n, long long N) {
    if (n < 1 || N < 1) throw std::invalid_argument("error_weight: n, N must be >= 1");
    if (n == 1) return 0.0;          // sum telescopes to 1 exactly
    if (n == 2) return 0.5 / N;      // 1/2 - (N-1)/(2N), closed form
    // direct power sum, largest terms first; the terms decay
    // geometrically in l so the loop exits after O(N/n * log) steps
    Accumulator s;
    for (long long l = N - 1; l >= 1; --l) {
        double term = std::pow(double(l) / N, double(n - 1));
        s.add(term);
        if (term == 0.0 || term < 1e-18 * s.value()) break;  // == 0 guards underflow at huge n
    }
    return 1.0 / n - s.value() / N;
}

ErrorNorm1d error_norm_1d(const OneDimCoeffs& a, int N) {
    if (N < 1) throw std::invalid_argument("error_norm_1d: N must be >= 1");
    const int n_max = a.n_max();
    const double rel_tol = 1e-10;
    const double n_switch = 64.0 * std::log(std::max(2, N));

    // suffix sums of a_n^2 drive the early-exit bound sum n I a^2 <= sum a^2
    std::vector<double> suffix(n_max + 2, 0.0);
    for (int n = n_max; n >= 0; --n) suffix[n] = suffix[n + 1] + a.a[n] * a.a[n];

    ErrorNorm1d out;
    out.certified = a.tail_sq_bound >= 0.0;
    out.tail_bound = std::max(0.0, a.tail_sq_bound);

    Accumulator acc;
    for (int n = 2; n <= n_max; ++n) {
        double asq = a.a[n] * a.a[n];
        if (asq != 0.0) acc.add(n * error_weight(n, N) * asq);
        if (n > n_switch && suffix[n + 1] < rel_tol * acc.value()) {
            out.tail_bound += suffix[n + 1];  // rigorous: n I_{n,N} <= 1
            break;
        }
    }
    out.value = acc.value();
    return out;
}

ErrorNorm1d heaviside_error_norm_1d(int N, double tail_frac, long long n_start, long long n_cap) {
    if (N < 1) throw std::invalid_argument("heaviside_error_norm_1d: N must be >= 1");
    Accumulator acc;
    HeavisideTailIterator it;  // k = 1
    it.next();                 // k = 3, the first contributing level
    long long checkpoint = n_start;
    ErrorNorm1d out;
    out.certified = true;
    while (true) {
        acc.add(it.k() * error_weight(it.k(), N) * it.a_squared());
        if (it.k() >= checkpoint) {
            double tail = it.tail_sq_bound();
            if (tail <= tail_frac * acc.value() || it.k() >= n_cap) {
                out.value = acc.value();
                out.tail_bound = tail;
                return out;
            }
            checkpoint *= 2;
        }
        it.next();
    }
}

} // namespace chaoskit
