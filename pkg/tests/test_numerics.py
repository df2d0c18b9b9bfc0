import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import digamma as scipy_digamma

from chebotarev.numerics import (
    EULER_GAMMA, IntegrationError, NoRootError, QuadratureSpec, bisect_min_root, digamma,
    g_bound, integrate,
)
from oracles import g_bound_grid


def test_digamma_classical_values():
    assert digamma(1) == pytest.approx(-EULER_GAMMA, abs=1e-13)
    assert digamma(0.5) == pytest.approx(-EULER_GAMMA - 2 * math.log(2), abs=1e-13)
    assert digamma(2) == pytest.approx(1 - EULER_GAMMA, abs=1e-13)


def test_digamma_recurrence_grid():
    for k in range(1, 101):
        x = 0.5 * k
        assert abs(digamma(x + 1) - digamma(x) - 1 / x) < 1e-12


@given(st.floats(min_value=1e-3, max_value=1e6))
def test_digamma_matches_scipy(x):
    ref = float(scipy_digamma(x))
    assert digamma(x) == pytest.approx(ref, rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("x", [0, -1, -0.5])
def test_digamma_domain(x):
    with pytest.raises(ValueError):
        digamma(x)


def test_g_bound_at_zero_width():
    assert g_bound(2, 0) == pytest.approx(-0.5 + 1 / 12 - math.log(2), abs=1e-15)


def test_g_bound_infinite_majorant():
    assert g_bound(2, math.inf) == pytest.approx(0.5 * math.log(2) + 1 / 12 - math.log(2), abs=1e-15)


def test_g_bound_frozen_oracle():
    # Dense grid plus mpmath critical-point search: the maximum over [0, 1] sits at t = 0.
    assert g_bound(3, 1) == pytest.approx(-0.58397836874807722, abs=1e-12)
    assert g_bound(3, 1) == pytest.approx(g_bound_grid(3, 1), abs=1e-9)


@pytest.mark.parametrize("sigma", [0.3, 1.0, 2.0, 3.7, 8.0])
def test_g_bound_against_grid(sigma):
    for t0 in (0.5, 3.0, 20.0):
        assert g_bound(sigma, t0) >= g_bound_grid(sigma, t0) - 1e-12
        assert g_bound(sigma, t0) == pytest.approx(g_bound_grid(sigma, t0), abs=1e-8)


@pytest.mark.parametrize("sigma", [0.5, 2.0, 2.83, 5.0, 12.0])
def test_g_bound_monotone_in_t0_and_below_majorant(sigma):
    grid = [0, 0.1, 0.5, 1, 2, 5, 10, 50, 200]
    vals = [g_bound(sigma, t) for t in grid]
    assert all(b >= a - 1e-14 for a, b in zip(vals, vals[1:]))
    assert vals[-1] <= g_bound(sigma, math.inf) + 1e-14


def test_g_bound_domain():
    with pytest.raises(ValueError):
        g_bound(0, 1)


def test_integrate_closed_forms():
    assert integrate(lambda r: math.log(r) / r ** 3, 1, math.inf) == pytest.approx(0.25, rel=1e-9)
    assert integrate(lambda r: 1 / r ** 2, 1, math.inf) == pytest.approx(1.0, rel=1e-9)
    assert integrate(lambda t: 9 / (9 + 4 * t * t), 0, math.inf) == pytest.approx(3 * math.pi / 4, rel=1e-9)


def test_integrate_reports_failure_with_estimate():
    with pytest.raises(IntegrationError) as info:
        integrate(lambda x: math.sin(1 / x) / x, 1e-9, 1, QuadratureSpec(rtol=1e-12, atol=1e-300, max_depth=3))
    assert math.isfinite(info.value.estimate)


def test_quadrature_spec_validation():
    with pytest.raises(ValueError):
        QuadratureSpec(rtol=0)
    with pytest.raises(ValueError):
        QuadratureSpec(max_depth=0)


def test_bisect_examples():
    x = bisect_min_root(lambda x: x - 1, 0, 2, 1e-6)
    assert x > 1 and x - 1 <= 1e-6
    assert bisect_min_root(lambda x: x * x - 4, 0, 3, 1e-8) == pytest.approx(2, abs=1e-8)


def test_bisect_returns_lo_when_already_positive():
    assert bisect_min_root(lambda x: 1.0, 0.5, 2, 1e-6) == 0.5


def test_bisect_contract():
    tol = 1e-5
    F = lambda x: x ** 3 - 2
    x = bisect_min_root(F, 0, 5, tol)
    assert F(x) > 0 and F(x - tol) <= 0


def test_bisect_no_root():
    with pytest.raises(NoRootError):
        bisect_min_root(lambda x: -1.0, 0, 1, 1e-6)


def test_bisect_worked_medium_case(p9):
    from chebotarev.leastprime import CaseParams, exceptional_setup, slack_medium

    params = CaseParams()
    s = exceptional_setup(p9, params)
    # Minimal theta at the fixed exponent c4; the c4 itself is the worked value.
    theta = bisect_min_root(lambda th: slack_medium(th, params.alpha_m, params, s, p9), 1.0001, 3, 1e-7)
    assert s.c4 == pytest.approx(150.4072, rel=5e-4)
    assert 1.0 < theta <= 1.02
