#include <doctest.h>

#include <cmath>

#include "chaoskit/clt_lab.hpp"
#include "chaoskit/functionals.hpp"
#include "chaoskit/gaussian_space.hpp"

using namespace chaoskit;

namespace {
FunctionalSpec wt_squared() {
    return FunctionalSpec::terminal(Payoff{Payoff::Kind::power, 2.0});
}
} // namespace

TEST_CASE("TimeGrid invariants") {
    TimeGrid g(7, 2.5);
    CHECK(g.t(0) == 0.0);
    CHECK(g.t(7) == 2.5);
    for (int k = 0; k < 7; ++k) CHECK(g.t(k) < g.t(k + 1));
    CHECK(std::abs(g.dt() * g.N - g.T) <= 1e-14 * g.T);
    CHECK_THROWS_AS(TimeGrid(0, 1.0), std::invalid_argument);
}

TEST_CASE("project_chaos on simple functionals") {
    TimeGrid g2(2, 1.0);

    SUBCASE("constant") {
        auto spec = project_chaos(FunctionalSpec::raw([](const std::vector<double>&) { return 5.0; }),
                                  g2, 3, 6);
        CHECK(spec.get(MultiIndex({0, 0})) == doctest::Approx(5.0).epsilon(1e-12));
        for (const auto& [k, c] : spec.coeffs())
            if (k.degree() > 0) CHECK(std::abs(c) < 1e-12);
    }

    SUBCASE("first increment") {
        auto spec = project_chaos(
            FunctionalSpec::raw([](const std::vector<double>& dw) { return dw[0]; }), g2, 3, 6);
        CHECK(spec.get(MultiIndex({1, 0})) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
        CHECK(std::abs(spec.get(MultiIndex({0, 1}))) < 1e-12);
    }

    SUBCASE("guard trips") {
        TimeGrid big(12, 1.0);
        CHECK_THROWS_AS(project_chaos(wt_squared(), big, 2, 64), FeasibilityError);
    }
}

TEST_CASE("heaviside level-3 coefficient at N=1 (closed form path)") {
    TimeGrid g1(1, 1.0);
    auto spec = terminal_spectrum(Payoff{Payoff::Kind::heaviside, 0.0}, g1, 5);
    // H_2(0)/sqrt(6 pi) = -1/sqrt(12 pi)
    CHECK(spec.get(MultiIndex({3})) ==
          doctest::Approx(-1.0 / std::sqrt(12.0 * 3.14159265358979324)).epsilon(1e-12));
}

TEST_CASE("evaluate") {
    TimeGrid g1(1, 1.0);
    ChaosSpectrum s(g1, 2);
    s.set(MultiIndex({0}), 2.0);
    CHECK(evaluate(s, {0.37}) == 2.0);

    s.set(MultiIndex({1}), 1.0);
    s.set(MultiIndex({0}), 0.0);
    CHECK(evaluate(s, {1.3}) == doctest::Approx(1.3).epsilon(1e-15));  // dt = 1

    TimeGrid g2(2, 1.0);
    auto w2 = project_chaos(wt_squared(), g2, 2, 8);
    CHECK(evaluate(w2, {0.4, -0.2}) == doctest::Approx(0.04).epsilon(1e-10));
}

TEST_CASE("conditional expectation") {
    TimeGrid g2(2, 1.0);
    auto w2 = project_chaos(wt_squared(), g2, 2, 8);

    SUBCASE("l = 0 keeps the mean") {
        auto m = conditional_expectation(w2, 0);
        CHECK(m.size() == 1);
        CHECK(m.mean() == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("independent increment vanishes") {
        auto spec = project_chaos(
            FunctionalSpec::raw([](const std::vector<double>& dw) { return dw[1]; }), g2, 3, 6);
        auto c = conditional_expectation(spec, 1);
        CHECK(c.variance() < 1e-24);
    }

    SUBCASE("E[W_T^2 | G_1] = dW_1^2 + dt") {
        auto c = conditional_expectation(w2, 1);
        CHECK(c.mean() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(c.get(MultiIndex({2, 0})) == doctest::Approx(std::sqrt(2.0) * 0.5).epsilon(1e-12));
        CHECK(std::abs(c.get(MultiIndex({0, 2}))) < 1e-14);
        CHECK(std::abs(c.get(MultiIndex({1, 1}))) < 1e-14);
    }

    CHECK_THROWS_AS(conditional_expectation(w2, 3), std::invalid_argument);
}

TEST_CASE("derivative ladder") {
    TimeGrid g2(2, 1.0);

    SUBCASE("constant has zero derivative") {
        ChaosSpectrum s(g2, 0);
        s.set(MultiIndex::zero(2), 4.0);
        CHECK(derivative(s, 1).size() == 0);
    }

    SUBCASE("d_1 W_T = 1") {
        auto wt = project_chaos(
            FunctionalSpec::terminal(Payoff{Payoff::Kind::power, 1.0}), g2, 1, 6);
        auto d = derivative(wt, 1);
        CHECK(d.size() == 1);
        CHECK(d.mean() == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("d_2 W_T^2 = 2 W_T") {
        auto w2 = project_chaos(wt_squared(), g2, 2, 8);
        auto d = derivative(w2, 2);
        CHECK(d.get(MultiIndex({1, 0})) == doctest::Approx(2.0 * std::sqrt(0.5)).epsilon(1e-10));
        CHECK(d.get(MultiIndex({0, 1})) == doctest::Approx(2.0 * std::sqrt(0.5)).epsilon(1e-10));
        CHECK(std::abs(d.mean()) < 1e-12);
    }

    CHECK_THROWS_AS(derivative(ChaosSpectrum(g2, 1), 0), std::invalid_argument);
}

TEST_CASE("sobolev norm") {
    TimeGrid g1(1, 1.0);
    ChaosSpectrum s(g1, 3);
    s.set(MultiIndex({0}), 3.0);
    CHECK(sobolev_norm(s, 7.0) == doctest::Approx(9.0));

    ChaosSpectrum t(g1, 3);
    t.set(MultiIndex({1}), 1.0);
    CHECK(sobolev_norm(t, 1.0) == doctest::Approx(2.0));

    TimeGrid g2(2, 1.0);
    auto w2 = project_chaos(wt_squared(), g2, 2, 8);
    CHECK(sobolev_norm(w2, 0.0) == doctest::Approx(3.0).epsilon(1e-10));  // E[(W_T^2)^2] = 3T^2

    // number operator: a pure basis element of degree n scales by (1+n)^s
    ChaosSpectrum e(g2, 5);
    e.set(MultiIndex({2, 3}), 1.0);
    for (double sexp : {0.0, 0.5, 1.0, 2.0, -1.0})
        CHECK(sobolev_norm(e, sexp) == doctest::Approx(std::pow(6.0, sexp)).epsilon(1e-13));
}

TEST_CASE("tower property is coefficient-exact") {
    TimeGrid g3(3, 1.5);
    auto occ = build_additive(FunctionalSpec::occupation(), g3, 6);
    for (int l = 0; l <= 3; ++l)
        for (int m = 0; m <= 3; ++m) {
            auto lhs = conditional_expectation(conditional_expectation(occ, l), m);
            auto rhs = conditional_expectation(occ, std::min(l, m));
            CHECK(lhs.coeffs() == rhs.coeffs());
        }
}

TEST_CASE("commutation: derivative of conditional expectation") {
    TimeGrid g3(3, 1.0);
    auto occ = build_additive(FunctionalSpec::occupation(), g3, 6);
    for (int l = 2; l <= 3; ++l)
        for (int lp = 1; lp < l; ++lp) {
            auto lhs = derivative(conditional_expectation(occ, l), lp);
            auto rhs = conditional_expectation(derivative(occ, lp), l);
            REQUIRE(lhs.size() == rhs.size());
            for (const auto& [k, c] : lhs.coeffs())
                CHECK(c == doctest::Approx(rhs.get(k)).epsilon(1e-15));
        }
}

TEST_CASE("parseval: quadrature E[X^2] equals coefficient sum") {
    TimeGrid g2(2, 1.0);
    auto x = FunctionalSpec::raw([](const std::vector<double>& dw) {
        double w = dw[0] + dw[1];
        return w * w + 3.0 * dw[0];
    });
    auto spec = project_chaos(x, g2, 2, 12);
    auto xsq = FunctionalSpec::raw([&x, &g2](const std::vector<double>& dw) {
        double v = x(g2, dw);
        return v * v;
    });
    CHECK(spec.l2_squared() ==
          doctest::Approx(tensor_expectation(xsq, g2, 12)).epsilon(1e-8));
}

TEST_CASE("projection consistency for terminal payoffs") {
    // single-coordinate coefficients agree across coordinates
    for (int N : {2, 3, 4}) {
        TimeGrid g(N, 1.0);
        auto w2 = terminal_spectrum(Payoff{Payoff::Kind::power, 2.0}, g, 2);
        for (int m = 1; m <= 2; ++m)
            for (int l = 2; l <= N; ++l) {
                MultiIndex a = MultiIndex::zero(N), b = MultiIndex::zero(N);
                a.k[0] = m;
                b.k[l - 1] = m;
                CHECK(w2.get(a) == doctest::Approx(w2.get(b)).epsilon(1e-14));
            }
    }
}

TEST_CASE("spectrum csv dump") {
    TimeGrid g2(2, 1.0);
    ChaosSpectrum s(g2, 2);
    s.set(MultiIndex({1, 1}), 0.5);
    std::string csv = s.to_csv();
    CHECK(csv.find("k_1,k_2,coeff\n") == 0);
    CHECK(csv.find("1,1,5.0000000000000000e-01") != std::string::npos);
}
