import math

import pytest
from scipy.optimize import brentq

from yamacone.dynamics.params import (
    DynParams,
    a_bar_of_s,
    alpha_zero,
    alpha_zero_from_mu,
    b_bar_of_s,
    critical_alpha,
    dyn_params,
    s_zero,
    s_zero_residual,
    w2_discriminant_of_s,
)
from yamacone.errors import DomainError
from yamacone.geometry.cone import CaseSign, ConeParams, case_sign

FLAT7 = ConeParams(1, 5, 1.0, math.sqrt(4.0 / 3.0))


def test_flat_cone_coefficients() -> None:
    dp = DynParams.from_lambda(7, 0.0, 1.2, -10.0)
    assert dp.a_bar == pytest.approx(-50.0)
    assert dp.b_bar == pytest.approx(-15.0)
    assert dp.s == pytest.approx(0.25)
    assert dp.shift == pytest.approx(10.0)

    dp = DynParams.from_lambda(7, 0.0, 1.6, 5.0)
    assert dp.a_bar == pytest.approx(50 / 9)
    assert dp.b_bar == pytest.approx(-5 / 3)


def test_cone_realization_of_flat_dimension_seven() -> None:
    dp = dyn_params(FLAT7, 1.2, -10.0)
    assert abs(dp.a_bar + 50.0) < 1e-12
    assert abs(dp.b_bar + 15.0) < 1e-12


def test_critical_exponent() -> None:
    assert critical_alpha(7) == 1.8
    dp = DynParams.from_lambda(7, -6.0, critical_alpha(7), 1.0)
    assert dp.is_critical
    assert dp.b_bar == pytest.approx(0.0, abs=1e-12)
    assert dp.a_bar == pytest.approx(25 / 4 * 0.8)


def test_w1_discriminant_identity() -> None:
    for lam in (-20.0, -6.0, 0.0, 14.0):
        for alpha in (1.1, 1.35, 1.7):
            dp = DynParams.from_lambda(7, lam, alpha, 1.0)
            assert dp.w1_discriminant == pytest.approx(25 * dp.mu_sq / 4, rel=1e-12, abs=1e-10)


def test_alpha_zero_flat_cone() -> None:
    assert alpha_zero_from_mu(7, 1.0) == pytest.approx(1.4)
    a0 = alpha_zero(FLAT7)
    assert a0 == pytest.approx(1.4)
    assert abs(dyn_params(FLAT7, a0, 1.0).a_bar) < 1e-12

    root = brentq(lambda a: DynParams.from_lambda(7, 0.0, a, 1.0).a_bar, 1.2, 1.6, xtol=1e-14)
    assert root == pytest.approx(a0, abs=1e-10)


def test_s_parametrization() -> None:
    cone = ConeParams(3, 3, 1.0, 1.0)
    assert s_zero_residual(cone) < 1e-12
    assert s_zero(1.0) == 0.5

    dp = dyn_params(cone, 1.5, 2.0)
    assert a_bar_of_s(dp.s, 7, dp.lambda_mode) == pytest.approx(dp.a_bar)
    assert b_bar_of_s(dp.s, 7) == pytest.approx(dp.b_bar)
    assert w2_discriminant_of_s(dp.s, 7, dp.lambda_mode) == pytest.approx(dp.w2_discriminant)


def test_a_bar_increases_below_s_one() -> None:
    h = 1e-6
    for n in (3, 5, 7, 10):
        for lam in (-0.9 * (n - 1) * (n - 2), 0.0, 5.0):
            for k in range(1, 100):
                s = 0.01 * k
                slope = (a_bar_of_s(s + h, n, lam) - a_bar_of_s(s - h, n, lam)) / (2 * h)
                assert slope > 0, (n, lam, s)
            mu_sq = 1 + lam / ((n - 1) * (n - 2))
            assert a_bar_of_s(1.0, n, lam) == pytest.approx((n - 2) ** 2 / 4 * mu_sq)


def test_b_bar_negative_below_critical() -> None:
    for n in (3, 5, 7, 10):
        a_star = critical_alpha(n)
        for k in range(1, 50):
            alpha = 1 + (a_star - 1) * k / 50
            assert DynParams.from_lambda(n, 0.0, alpha, 1.0).b_bar < 0
            assert b_bar_of_s(k / 50, n) < 0
        assert DynParams.from_lambda(n, 0.0, a_star, 1.0).b_bar == pytest.approx(0.0, abs=1e-12)


def test_alpha_validation() -> None:
    with pytest.raises(DomainError):
        DynParams.from_lambda(7, 0.0, 1.0, 1.0)
    with pytest.raises(DomainError) as exc:
        DynParams.from_lambda(7, 0.0, 1.9, 1.0)
    assert "(n+2)/(n-2)" in str(exc.value)
    with pytest.raises(DomainError):
        DynParams.from_lambda(7, -40.0, 1.5, 1.0)


def test_from_raw() -> None:
    dp = DynParams.from_raw(-50.0, -15.0, -10.0, 1.2, 7)
    assert not dp.derived
    assert dp.lambda_mode == pytest.approx(0.0, abs=1e-9)
    assert dp.mu_sq == pytest.approx(1.0)

    with pytest.raises(DomainError):
        DynParams.from_raw(1.0, 0.5, 1.0, 1.5, 7)
    with pytest.raises(DomainError):
        DynParams.from_raw(-10.0, -1.0, 1.0, 1.5, 7)


def test_plus_case_matches_cone_sign() -> None:
    for r in (1.0, 1.5, 2.0, 2.5, 3.0):
        cone = ConeParams(3, 3, r, r)
        assert dyn_params(cone, 1.5, 1.0).plus_case == (case_sign(cone) is CaseSign.PLUS)
