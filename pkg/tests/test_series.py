import math

import pytest

from yamacone.errors import DomainError, SingularDenominatorError
from yamacone.geometry.cone import ConeParams
from yamacone.spectral.modes import coupling_constant, indicial_exponents
from yamacone.spectral.series import (
    eval_series,
    mode_series,
    residual_slope,
    series_coefficients,
    series_log_residual,
    series_residual,
    series_residual_for_mode,
    working_precision,
)

ELLS = (1e-1, 3e-2, 1e-2, 3e-3, 1e-3)


def test_zero_spectral_parameter_keeps_leading_term() -> None:
    sol = series_coefficients(0.7, 7, 0.0, 1.0, 5)
    assert sol.coeffs == (1.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    assert sol.truncation_M == 5


def test_coefficients_hand_unrolled() -> None:
    sol = series_coefficients(0.0, 5, 1.0, 1.0, 4)
    assert sol.coeffs[1] == pytest.approx(-0.1)
    # (m+2)(2ν+m+n) at m=2 is 4·7
    assert sol.coeffs[2] == pytest.approx(1 / 280)
    assert eval_series(sol, 0.1) == pytest.approx(0.999, abs=1e-6)


def test_eval_pure_power() -> None:
    cone = ConeParams(3, 3, 1.0, 1.0)
    _, sigma = indicial_exponents(cone, 0, 0)
    sol = mode_series(cone, 0, 0, 0.0, M=3)
    assert eval_series(sol, 0.5) == pytest.approx(0.5**sigma)


def test_eval_series_domain() -> None:
    sol = series_coefficients(0.0, 5, 1.0, 1.0, 4)
    with pytest.raises(DomainError):
        eval_series(sol, 0.0)
    with pytest.raises(DomainError):
        eval_series(sol, 3.0)


def test_series_coefficients_errors() -> None:
    with pytest.raises(DomainError):
        series_coefficients(0.0, 5, 1.0, 1.0, -1)
    with pytest.raises(SingularDenominatorError):
        series_coefficients(-2.5, 5, 1.0, 1.0, 3)


def test_residual_slope_matches_truncation() -> None:
    cone = ConeParams(3, 3, 1.0, 1.0)
    M = 5
    sol = mode_series(cone, 0, 0, 1.0, M=M)
    logs = series_residual_for_mode(cone, 0, 0, sol, ELLS)
    assert residual_slope(ELLS, logs) == pytest.approx(sol.nu + 2 * M, abs=1e-8)


def test_residual_is_the_surviving_tail() -> None:
    cone = ConeParams(2, 4, 1.3, 0.8)
    K = coupling_constant(cone, 1, 1)
    sol = mode_series(cone, 1, 1, 2.0, M=4)
    (res,) = series_residual(sol, K, [0.05])
    tail = abs(sol.Q1 * sol.coeffs[-1]) * 0.05 ** (sol.nu + 2 * sol.truncation_M)
    assert res == pytest.approx(tail, rel=1e-8)


def test_log_residual_survives_underflow() -> None:
    cone = ConeParams(3, 3, 1.0, 1.0)
    sol = mode_series(cone, 0, 0, 1.0, M=25)
    K = coupling_constant(cone, 0, 0)
    assert series_residual(sol, K, [1e-10]) == [0.0]
    (log_res,) = series_log_residual(sol, K, [1e-10])
    assert math.isfinite(log_res)
    assert log_res < -1000


def test_working_precision_resolves_the_tail() -> None:
    cone = ConeParams(3, 3, 1.0, 1.0)
    sol = mode_series(cone, 0, 0, 1.0, M=25)
    K = coupling_constant(cone, 0, 0)
    dps = working_precision(sol, [1e-10])
    assert dps > 569
    (auto,) = series_log_residual(sol, K, [1e-10])
    (doubled,) = series_log_residual(sol, K, [1e-10], dps=2 * dps)
    assert auto == pytest.approx(doubled, abs=1e-6)
    # the tail itself, in logs
    expected = math.log(sol.Q1 * abs(sol.coeffs[-1])) + (sol.nu + 50) * math.log(1e-10)
    assert auto == pytest.approx(expected, abs=1e-6)
    # too few digits leaves rounding noise well above the tail
    (coarse,) = series_log_residual(sol, K, [1e-10], dps=400)
    assert coarse > auto + 100


def test_working_precision_bounds() -> None:
    sol = series_coefficients(0.0, 5, 0.0, 1.0, 3)
    assert working_precision(sol, [0.5]) == 50
    with pytest.raises(DomainError):
        working_precision(sol, [0.0])
