#include "chaoskit/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chaoskit/accum.hpp"
#include "chaoskit/clark_ocone.hpp"

namespace chaoskit {

double z_nk(int N, int k, double T) {
    if (N < 1) throw std::invalid_argument("z_nk: N must be >= 1");
    if (k < 2) throw std::invalid_argument("z_nk: k must be >= 2");
    const double dt = T / N;

    // Z = dt^2 sum_l R_l^2 g_l with
    //   R_l = sum_{i=l}^N (l/i)^{k/2}   (backward recurrence)
    //   g_l = 1 - (1-1/l)^k - (k/l)(1-1/l)^{k-1}
    // every factor stays in [0, N], so arbitrary k is safe
    Accumulator acc;
    double R = 0.0;
    for (int l = N; l >= 1; --l) {
        R = 1.0 + ((l < N) ? std::pow(double(l) / (l + 1), 0.5 * k) * R : 0.0);
        double g;
        if (l == 1) {
            g = 1.0;  // t_0 = 0 kills both lower terms for k >= 2
        } else {
            double r = 1.0 - 1.0 / l;
            double q = std::pow(r, double(k - 1));
            g = 1.0 - q * r - (double(k) / l) * q;
        }
        acc.add(R * R * g);
    }
    return dt * dt * acc.value();
}

OccupationError occupation_error_norm(int N, double T, long long k_max) {
    if (k_max < 3) throw std::invalid_argument("occupation_error_norm: k_max must be >= 3");
    OccupationError out;
    Accumulator acc;
    HeavisideTailIterator it;  // k = 1
    it.next();                 // first contributing level k = 3 (a_2 = 0)
    while (it.k() <= k_max) {
        acc.add(z_nk(N, static_cast<int>(it.k()), T) * it.a_squared());
        it.next();
    }
    out.value = acc.value();
    // the iterator sits on the first level beyond k_max, not yet summed
    out.tail_bound = (9.0 * T * T / N) * (it.a_squared() + it.tail_sq_bound());
    return out;
}

double alpha_index(const std::vector<double>& A, int n) {
    if (n < 2) throw std::invalid_argument("alpha_index: n must be >= 2");
    const int N = static_cast<int>(A.size());
    if (N < 1) throw std::invalid_argument("alpha_index: A must be non-empty");
    double sup = 0.0;
    Accumulator denom;
    for (int l = 1; l <= N; ++l) {
        sup = std::max(sup, A[l - 1]);
        double w = std::pow(double(l) / N, n) - std::pow(double(l - 1) / N, n);
        denom.add(A[l - 1] * w);
    }
    double d = denom.value();
    if (d == 0.0) return 0.0;  // zero-denominator convention
    return sup / d;
}

std::vector<double> occupation_A(int N, int n) {
    std::vector<double> A(N);
    double suffix = 0.0;
    for (int l = N; l >= 1; --l) {
        suffix += std::pow(double(l), -0.5 * n);
        A[l - 1] = suffix * suffix;
    }
    return A;
}

std::vector<double> occupation_A_literal(int N, int n) {
    std::vector<double> A = occupation_A(N, n);
    double factor = 0.0;  // (2 pi n)^{-1} H_{n-1}(0)^2; zero for even n
    if (n % 2 == 1) {
        HeavisideTailIterator it;
        while (it.k() < n) it.next();
        factor = it.a_squared();
    }
    for (double& v : A) v *= factor;
    return A;
}

ErrorReport rate_fit(std::vector<RatePoint> points) {
    std::sort(points.begin(), points.end(),
              [](const RatePoint& a, const RatePoint& b) { return a.N < b.N; });
    std::vector<RatePoint> kept;
    for (const auto& p : points) {
        if (p.err_sq <= 0.0) continue;
        if (!kept.empty() && kept.back().N == p.N)
            throw std::invalid_argument("rate_fit: duplicate N");
        kept.push_back(p);
    }
    if (kept.size() < 3) throw std::invalid_argument("rate_fit: need >= 3 positive points");

    auto ols = [](const std::vector<RatePoint>& pts, std::size_t from, double& slope,
                  double& intercept, double& max_res) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        std::size_t m = pts.size() - from;
        for (std::size_t i = from; i < pts.size(); ++i) {
            double x = std::log(double(pts[i].N));
            double y = 0.5 * std::log(pts[i].err_sq);  // log ||Err||
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
        }
        slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        intercept = (sy - slope * sx) / m;
        max_res = 0.0;
        for (std::size_t i = from; i < pts.size(); ++i) {
            double x = std::log(double(pts[i].N));
            double y = 0.5 * std::log(pts[i].err_sq);
            max_res = std::max(max_res, std::abs(y - (slope * x + intercept)));
        }
    };

    ErrorReport rep;
    rep.points = kept;
    ols(kept, kept.size() / 2, rep.slope, rep.intercept, rep.max_residual);
    ols(kept, 0, rep.slope_full, rep.intercept_full, rep.max_residual_full);
    return rep;
}

} // namespace chaoskit
