import math

import pytest

import chaoskit as ck


def test_hermite_values():
    assert ck.hermite_eval(0, 7.3) == 1.0
    assert ck.hermite_eval(1, 1.5) == 1.5
    assert ck.hermite_eval(2, 0.0) == pytest.approx(-1 / math.sqrt(2), rel=1e-14)


def test_quadrature_rule():
    r = ck.gauss_hermite_rule(3)
    assert r.nodes == pytest.approx([-math.sqrt(3), 0.0, math.sqrt(3)], abs=1e-13)
    assert r.weights == pytest.approx([1 / 6, 2 / 3, 1 / 6], abs=1e-13)


def test_spectrum_roundtrip():
    grid = ck.TimeGrid(2, 1.0)
    spec = ck.terminal_spectrum(ck.parse_payoff("power:2"), grid, 2)
    assert spec.mean() == pytest.approx(1.0)
    assert spec.get([1, 1]) == pytest.approx(1.0)  # 2 dt
    assert ck.evaluate(spec, [0.4, -0.2]) == pytest.approx(0.04, abs=1e-12)
    assert ck.error_norm_from_spectrum(spec, 1) == pytest.approx(1.0)  # 2 T^2 / N


def test_error_norm_1d_closed_form():
    a = ck.coeffs_1d(ck.parse_payoff("power:2"), 1.0, 2)
    for N in (2, 16, 128):
        assert ck.error_norm_1d(a, N).value == pytest.approx(2.0 / N, rel=1e-12)


def test_conditional_expectation_and_derivative():
    grid = ck.TimeGrid(2, 1.0)
    spec = ck.terminal_spectrum(ck.parse_payoff("power:2"), grid, 2)
    cond = ck.conditional_expectation(spec, 1)
    assert cond.get([2, 0]) == pytest.approx(math.sqrt(2) * 0.5)
    assert cond.get([0, 2]) == 0.0
    d = ck.derivative(spec, 2)
    assert d.get([1, 0]) == pytest.approx(2 * math.sqrt(0.5))


def test_occupation_quantities():
    assert ck.z_nk(2, 2, 1.0) == pytest.approx(0.625, rel=1e-13)
    occ = ck.occupation_error_norm(8, 1.0, 401)
    assert occ.value > 0
    assert occ.tail_bound < occ.value
    alpha = ck.alpha_index(ck.occupation_A(2, 3), 3)
    assert alpha == pytest.approx(5.414, abs=1e-3)


def test_feasibility_guard_surfaces():
    grid = ck.TimeGrid(12, 1.0)
    payoff = ck.FunctionalSpec.terminal(ck.parse_payoff("power:2"))
    with pytest.raises(ck.FeasibilityError):
        ck.project_chaos(payoff, grid, 2, 64)


def test_sampling_is_deterministic():
    grid = ck.TimeGrid(8, 1.0)
    a = ck.sample_errors(ck.parse_payoff("power:2"), grid, 1, 64, 7)
    b = ck.sample_errors(ck.parse_payoff("power:2"), grid, 1, 64, 7)
    assert [a.at(i, 1) for i in range(64)] == [b.at(i, 1) for i in range(64)]


def test_rate_fit():
    pts = [ck.RatePoint(N, 4.0 / N) for N in (2, 4, 8)]
    rep = ck.rate_fit(pts)
    assert rep.slope == pytest.approx(-0.5, abs=1e-12)
    assert rep.max_residual_full == pytest.approx(0.0, abs=1e-12)


def test_clt_surface():
    grid = ck.TimeGrid(16, 1.0)
    payoff = ck.parse_payoff("power:2")
    assert ck.limit_variance(payoff, 1.0, 0).value == pytest.approx(2.0, rel=1e-9)
    assert ck.limit_variance(payoff, 1.0, 1).value == pytest.approx(2.0, rel=1e-9)
    assert ck.limit_variance(ck.parse_payoff("heaviside"), 1.0, 1).divergent

    samples = ck.sample_errors(payoff, grid, 2, 4000, 7)
    rep = ck.clt_report(samples, [2.0, 2.0, 0.0])
    assert abs(rep.levels[0].z) < 4
    assert abs(rep.levels[1].z) < 4
    assert rep.levels[2].degenerate
    assert len(rep.cross) == 1 and abs(rep.cross[0].z) < 4

    walk = ck.scaled_walk_stats(grid, 0, 4000, 7)
    assert walk.var == pytest.approx(1.0, abs=4 * walk.se)
