#include <doctest.h>

#include <cmath>

#include "chaoskit/clt_lab.hpp"
#include "chaoskit/functionals.hpp"
#include "chaoskit/gaussian_space.hpp"

using namespace chaoskit;

namespace {
ChaosSpectrum wt_squared(int N, double T = 1.0) {
    return terminal_spectrum(Payoff{Payoff::Kind::power, 2.0}, TimeGrid(N, T), 2);
}
} // namespace

TEST_CASE("integrand examples") {
    TimeGrid g2(2, 1.0);
    auto wt = terminal_spectrum(Payoff{Payoff::Kind::power, 1.0}, g2, 1);
    for (int l = 1; l <= 2; ++l) {
        auto g = co_integrand(wt, l, 1);
        CHECK(g.size() == 1);
        CHECK(g.mean() == doctest::Approx(1.0).epsilon(1e-13));
    }

    auto w2 = wt_squared(2);
    auto g21 = co_integrand(w2, 2, 1);  // E[2 W_T | G_1] = 2 W_{t_1}
    CHECK(g21.get(MultiIndex({1, 0})) == doctest::Approx(2.0 * std::sqrt(0.5)).epsilon(1e-12));
    CHECK(std::abs(g21.mean()) < 1e-14);

    auto g12 = co_integrand(w2, 1, 2);  // E[d_1^2 X | G_0] = 2
    CHECK(g12.size() == 1);
    CHECK(g12.mean() == doctest::Approx(2.0).epsilon(1e-12));

    CHECK_THROWS_AS(co_integrand(w2, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(co_integrand(w2, 1, 0), std::invalid_argument);
}

TEST_CASE("partial sums reconstruct polynomials") {
    auto w2 = wt_squared(2);

    SUBCASE("n = 0 is the mean") {
        CHECK(partial_sum_eval(w2, 0, {0.3, 0.6}) == doctest::Approx(1.0).epsilon(1e-13));
    }

    SUBCASE("gaussian terminates at level 1") {
        TimeGrid g3(3, 1.0);
        auto wt = terminal_spectrum(Payoff{Payoff::Kind::power, 1.0}, g3, 1);
        CHECK(partial_sum_eval(wt, 1, {0.2, -0.5, 0.1}) == doctest::Approx(-0.2).epsilon(1e-12));
    }

    SUBCASE("degree-2 payoff is exact at n = 2") {
        CHECK(partial_sum_eval(w2, 2, {0.4, -0.2}) == doctest::Approx(0.04).epsilon(1e-12));
    }

    SUBCASE("dimension and range checks") {
        CHECK_THROWS_AS(partial_sum_eval(w2, 2, {0.4}), std::invalid_argument);
        CHECK_THROWS_AS(partial_sum_eval(w2, 3, {0.4, -0.2}), std::invalid_argument);
    }
}

TEST_CASE("error norms from the spectrum") {
    auto w2 = wt_squared(2);
    CHECK(error_norm_from_spectrum(w2, 1) == doctest::Approx(1.0).epsilon(1e-12));  // 2T^2/N
    CHECK(error_norm_from_spectrum(w2, 0) == doctest::Approx(2.0).epsilon(1e-12));  // Var
    CHECK(error_norm_from_spectrum(w2, 2) == 0.0);

    TimeGrid g2(2, 1.0);
    auto wt = terminal_spectrum(Payoff{Payoff::Kind::power, 1.0}, g2, 1);
    CHECK(error_norm_from_spectrum(wt, 1) == 0.0);
}

TEST_CASE("monotone and orthogonal decomposition") {
    TimeGrid g3(3, 1.0);
    auto occ = build_additive(FunctionalSpec::occupation(), g3, 8);
    double var = occ.variance();
    double prev = var;
    for (int n = 0; n <= 8; ++n) {
        double e = error_norm_from_spectrum(occ, n);
        CHECK(e <= prev + 1e-16);
        prev = e;
        // ||partial sum - E[X]||^2 is the kept mass
        double kept = 0.0;
        for (const auto& [k, c] : occ.coeffs())
            if (k.trailing() != 0 && k.trailing_value() <= n) kept += c * c;
        CHECK(e + kept == doctest::Approx(var).epsilon(1e-13));
    }
    CHECK(error_norm_from_spectrum(occ, 8) == 0.0);
}

TEST_CASE("error weight bounds 0 < I <= min(1/n, 1/N)") {
    for (long long n : {2LL, 3LL, 5LL, 17LL, 101LL, 999LL, 10000LL})
        for (long long N : {1LL, 2LL, 3LL, 64LL, 1000LL, 10000LL}) {
            double I = error_weight(n, N);
            CHECK(I > 0.0);
            CHECK(I <= std::min(1.0 / n, 1.0 / N) * (1 + 1e-14));
        }
    CHECK(error_weight(2, 5) == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("error_norm_1d closed forms") {
    SUBCASE("pure gaussian mass gives zero") {
        OneDimCoeffs a;
        a.T = 1.0;
        a.a = {0.0, 3.0};
        a.tail_sq_bound = 0.0;
        ErrorNorm1d e = error_norm_1d(a, 7);
        CHECK(e.value == 0.0);
        CHECK(e.certified);
    }

    SUBCASE("x^2 gives 2 T^2 / N exactly") {
        for (double T : {1.0, 2.0}) {
            OneDimCoeffs a = coeffs_1d(Payoff{Payoff::Kind::power, 2.0}, T, 2);
            for (int N : {1, 2, 3, 17, 1024, 4096}) {
                ErrorNorm1d e = error_norm_1d(a, N);
                CHECK(std::abs(e.value - 2.0 * T * T / N) <= 1e-12 * (2.0 * T * T / N));
            }
        }
    }

    SUBCASE("matches brute-force chaos enumeration for N <= 4") {
        for (const char* text : {"power:2", "power:3", "sin"}) {
            OneDimCoeffs a = coeffs_1d(parse_payoff(text), 1.0, 12);
            for (int N : {2, 3, 4}) {
                auto spec = terminal_spectrum(a, TimeGrid(N, 1.0), 12);
                CHECK(error_norm_1d(a, N).value ==
                      doctest::Approx(error_norm_from_spectrum(spec, 1)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("heaviside cross-oracle at matched truncation") {
    // spread spectrum route vs the n I_{n,N} a_n^2 route; independent code paths
    Payoff h{Payoff::Kind::heaviside, 0.0};
    for (int N : {2, 3}) {
        int deg = N == 2 ? 60 : 24;
        TimeGrid g(N, 1.0);
        auto spec = terminal_spectrum(h, g, deg);
        OneDimCoeffs a = coeffs_1d(h, 1.0, deg);
        ErrorNorm1d e = error_norm_1d(a, N);
        CHECK(error_norm_from_spectrum(spec, 1) == doctest::Approx(e.value).epsilon(1e-6));
    }
}

TEST_CASE("streaming heaviside error norm") {
    ErrorNorm1d fast = heaviside_error_norm_1d(4, 0.01, 1 << 10);
    OneDimCoeffs a = coeffs_1d(Payoff{Payoff::Kind::heaviside, 0.0}, 1.0, 1 << 12);
    ErrorNorm1d ref = error_norm_1d(a, 4);
    CHECK(fast.value == doctest::Approx(ref.value).epsilon(2e-2));
    CHECK(fast.certified);
    CHECK(fast.tail_bound <= 0.01 * fast.value);
    // tail really is a bound: a longer run only adds mass below it
    ErrorNorm1d longer = heaviside_error_norm_1d(4, 1e-5, 1 << 10);
    CHECK(longer.value >= fast.value);
    CHECK(longer.value - fast.value <= fast.tail_bound);
}

TEST_CASE("monte carlo residual matches error_norm_from_spectrum") {
    TimeGrid g2(2, 1.0);
    auto occ = build_additive(FunctionalSpec::occupation(), g2, 10);
    const long long M = 100000;
    SampleMatrix s = sample_errors_from_spectrum(occ, 1, M, 99);
    double mean_sq = 0.0;
    for (long long i = 0; i < M; ++i) mean_sq += s.at(i, 1) * s.at(i, 1) / M;
    mean_sq *= g2.dt();  // undo the (dt)^{-1/2} scaling: E[Err_1^2]
    double exact = error_norm_from_spectrum(occ, 1);
    // 5 standard errors of the M-sample mean of Err^2
    double se = 0.0;
    for (long long i = 0; i < M; ++i) {
        double v = s.at(i, 1) * s.at(i, 1) * g2.dt() - mean_sq;
        se += v * v;
    }
    se = std::sqrt(se / M / M);
    CHECK(std::abs(mean_sq - exact) < 5.0 * se);
}

TEST_CASE("monte carlo heaviside errors match the exact series") {
    // third route: pathwise sampling with smoothed conditional integrands
    Payoff h{Payoff::Kind::heaviside, 0.0};
    for (int N : {2, 8}) {
        TimeGrid g(N, 1.0);
        const long long M = 100000;
        SampleMatrix s = sample_errors(h, g, 1, M, 2718);
        double mean = 0.0;
        for (long long i = 0; i < M; ++i) {
            double e = s.at(i, 1) * std::sqrt(g.dt());
            mean += e * e / M;
        }
        double dev = 0.0;
        for (long long i = 0; i < M; ++i) {
            double e = s.at(i, 1) * std::sqrt(g.dt());
            dev += (e * e - mean) * (e * e - mean);
        }
        double se = std::sqrt(dev / M / M);
        ErrorNorm1d exact = heaviside_error_norm_1d(N, 1e-4);
        CHECK(std::abs(mean - exact.value) < 5.0 * se);
    }
}

TEST_CASE("N * err stays bounded for smooth payoffs") {
    for (const char* text : {"power:2", "power:3", "sin"}) {
        OneDimCoeffs a = coeffs_1d(parse_payoff(text), 1.0, 40);
        double first = error_norm_1d(a, 2).value * 2;
        for (int j = 1; j <= 12; ++j) {
            int N = 1 << j;
            double v = error_norm_1d(a, N).value * N;
            CHECK(v < 4.0 * first + 1e-12);  // bounded, no blow-up
        }
    }
}
