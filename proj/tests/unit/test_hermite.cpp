#include <doctest.h>

#include <cmath>

#include "chaoskit/hermite.hpp"

using namespace chaoskit;

TEST_CASE("hermite basics") {
    CHECK(hermite_eval(0, 7.3) == 1.0);
    CHECK(hermite_eval(1, 1.5) == 1.5);
    CHECK(hermite_eval(2, 0.0) == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(hermite_eval(3, 1.0) == doctest::Approx((1.0 - 3.0) / std::sqrt(6.0)).epsilon(1e-14));
}

TEST_CASE("parity is exact") {
    for (int n = 0; n <= 25; ++n)
        for (double x : {0.3, 1.7, 2.9, 4.2}) {
            double sign = n % 2 == 0 ? 1.0 : -1.0;
            CHECK(hermite_eval(n, -x) == sign * hermite_eval(n, x));
        }
}

TEST_CASE("zero values") {
    for (int m = 0; m <= 10; ++m) {
        CHECK(hermite_eval(2 * m + 1, 0.0) == 0.0);
        // H_{2m}(0)^2 (2m)! = ((2m-1)!!)^2
        double h = hermite_eval(2 * m, 0.0);
        double fact = 1.0, dfact = 1.0;
        for (int i = 2; i <= 2 * m; ++i) fact *= i;
        for (int i = 3; i <= 2 * m - 1; i += 2) dfact *= i;
        CHECK(h * h * fact == doctest::Approx(dfact * dfact).epsilon(1e-10));
    }
}

TEST_CASE("ladder identity against central differences") {
    const double h = 1e-5;
    for (int n = 1; n <= 15; ++n)
        for (double x = -3.0; x <= 3.0; x += 0.5) {
            double fd = (hermite_eval(n, x + h) - hermite_eval(n, x - h)) / (2 * h);
            CHECK(std::abs(fd - std::sqrt(double(n)) * hermite_eval(n - 1, x)) < 1e-6);
        }
}

TEST_CASE("small quadrature rules match closed forms") {
    QuadratureRule r1 = gauss_hermite_rule(1);
    CHECK(r1.nodes[0] == 0.0);
    CHECK(r1.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

    QuadratureRule r2 = gauss_hermite_rule(2);
    CHECK(r2.nodes[0] == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(r2.nodes[1] == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(r2.weights[0] == doctest::Approx(0.5).epsilon(1e-13));

    QuadratureRule r3 = gauss_hermite_rule(3);
    CHECK(r3.nodes[0] == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-13));
    CHECK(r3.nodes[1] == 0.0);
    CHECK(r3.nodes[2] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
    CHECK(r3.weights[0] == doctest::Approx(1.0 / 6).epsilon(1e-13));
    CHECK(r3.weights[1] == doctest::Approx(2.0 / 3).epsilon(1e-13));
}

TEST_CASE("rule invariants: normalized, symmetric, increasing") {
    for (int q : {1, 2, 3, 5, 8, 16, 21, 32, 64, 128}) {
        QuadratureRule r = gauss_hermite_rule(q);
        double wsum = 0.0;
        for (double w : r.weights) {
            CHECK(w > 0.0);
            wsum += w;
        }
        CHECK(std::abs(wsum - 1.0) < 1e-12);
        for (int i = 0; i + 1 < q; ++i) CHECK(r.nodes[i] < r.nodes[i + 1]);
        for (int i = 0; i < q; ++i) CHECK(r.nodes[i] == -r.nodes[q - 1 - i]);
    }
}

TEST_CASE("moment exactness up to degree 2q-1") {
    for (int q : {2, 5, 10, 16}) {
        QuadratureRule r = gauss_hermite_rule(q);
        for (int p = 0; p <= 2 * q - 1; ++p) {
            double quad = r.integrate([&](double x) { return std::pow(x, p); });
            double scale = r.integrate([&](double x) { return std::pow(std::abs(x), p); });
            double exact = 0.0;
            if (p % 2 == 0) {
                exact = 1.0;
                for (int i = p - 1; i >= 3; i -= 2) exact *= i;  // (p-1)!!
            }
            CHECK(std::abs(quad - exact) <= 1e-10 * std::max(1.0, scale));
        }
    }
}

TEST_CASE("orthonormality via order-21 quadrature") {
    QuadratureRule r = gauss_hermite_rule(21);
    for (int i = 0; i <= 20; ++i)
        for (int j = i; j <= 20; ++j) {
            double v = r.integrate([&](double x) { return hermite_eval(i, x) * hermite_eval(j, x); });
            CHECK(std::abs(v - (i == j ? 1.0 : 0.0)) < 1e-10);
        }
}
