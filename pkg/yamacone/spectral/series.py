"""Power-series solutions of the radial linear equation at the cone tip.

Each mode solves u'' + (n−1)/ℓ·u' + (Q1 − K/ℓ²)·u = 0. On an indicial root ν the
coefficients of u = ℓ^ν·Σ a_m ℓ^m obey (m+2)(2ν+m+n)·a_{m+2} = −Q1·a_m with odd
coefficients zero.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from mpmath import mp, mpf

from yamacone.errors import DomainError, SingularDenominatorError
from yamacone.geometry.cone import ConeParams
from yamacone.spectral.modes import coupling_constant, indicial_exponents

DEFAULT_TRUNCATION = 25
DENOMINATOR_TOL = 1e-13
# Guard digits on top of the cancellation estimate in working_precision.
GUARD_DIGITS = 30
# Q1·ℓ² bound inside which the truncated series is evaluated.
SAFE_RANGE = 4.0


@dataclass(frozen=True)
class SeriesSolution:
    """Truncated series ℓ^ν·(a_0 + a_2 ℓ² + ... + a_{2M} ℓ^{2M})."""

    nu: float
    Q1: float
    coeffs: tuple[float, ...]
    truncation_M: int
    n: int


def series_coefficients(nu: float, n: int, Q1: float, a0: float, M: int) -> SeriesSolution:
    """
    Unroll the even-index recursion.

    Args:
        nu: An indicial root (the simplified denominator is only valid there).
        n: Cone dimension.
        Q1: Spectral parameter.
        a0: Leading coefficient.
        M: Truncation; coefficients a_0 ... a_{2M} are returned.

    Returns:
        The truncated series.
    """
    if M < 0:
        raise DomainError(f"truncation must be nonnegative, got {M}")
    coeffs = [float(a0)]
    for k in range(M):
        m = 2 * k
        denom = (m + 2) * (2 * nu + m + n)
        if abs(denom) < DENOMINATOR_TOL:
            raise SingularDenominatorError(
                f"recursion denominator vanishes at m={m} for nu={nu}, n={n}"
            )
        coeffs.append(-Q1 * coeffs[-1] / denom)
    return SeriesSolution(nu=nu, Q1=Q1, coeffs=tuple(coeffs), truncation_M=M, n=n)


def mode_series(
    cone: ConeParams,
    i: int,
    j: int,
    Q1: float,
    a0: float = 1.0,
    M: int = DEFAULT_TRUNCATION,
) -> SeriesSolution:
    """Series on the ν^{e+} branch of mode (i, j)."""
    _, nu_plus = indicial_exponents(cone, i, j)
    return series_coefficients(nu_plus, cone.n, Q1, a0, M)


def eval_series(sol: SeriesSolution, ell: float) -> float:
    """Evaluate ℓ^ν·Σ a_{2m} ℓ^{2m} with the stored truncation."""
    if ell <= 0:
        raise DomainError(f"series evaluation needs ell > 0, got {ell}")
    if sol.Q1 * ell * ell > SAFE_RANGE:
        raise DomainError(
            f"Q1*ell^2 = {sol.Q1 * ell * ell:.6g} exceeds the safe range {SAFE_RANGE}"
        )
    x = ell * ell
    acc = 0.0
    for a in reversed(sol.coeffs):
        acc = acc * x + a
    return ell**sol.nu * acc


def working_precision(sol: SeriesSolution, ells: Sequence[float]) -> int:
    """
    Decimal digits needed to resolve the truncation tail at the smallest ℓ.

    The operator terms of size |a_0|·ℓ^{ν−2} cancel down to the tail
    Q1·a_{2M}·ℓ^{ν+2M}, so about (2M+2)·|log10 ℓ_min| + log10(max|a| / Q1·|a_{2M}|)
    digits are lost.
    """
    ell_min = min(float(e) for e in ells)
    if ell_min <= 0:
        raise DomainError(f"residuals need ell > 0, got {ell_min}")
    digits = (2 * sol.truncation_M + 2) * max(0.0, -math.log10(ell_min))
    tail = abs(sol.Q1 * sol.coeffs[-1])
    if tail > 0:
        digits += max(0.0, math.log10(max(abs(a) for a in sol.coeffs) / tail))
    return max(50, math.ceil(digits) + GUARD_DIGITS)


def _residuals(
    sol: SeriesSolution, K: float, ells: Sequence[float], dps: int | None
) -> list[mpf]:
    if dps is None:
        dps = working_precision(sol, ells)
    with mp.workdps(dps):
        n = mpf(sol.n)
        Kp = mpf(K)
        Q1 = mpf(sol.Q1)
        h = (n - 2) / 2
        root = mp.sqrt(h * h + Kp)
        candidates = (-h + root, -h - root)
        nu = min(candidates, key=lambda c: abs(c - mpf(sol.nu)))

        coeffs = [mpf(sol.coeffs[0])]
        for k in range(sol.truncation_M):
            m = 2 * k
            coeffs.append(-Q1 * coeffs[-1] / ((m + 2) * (2 * nu + m + n)))

        out = []
        for ell in ells:
            x = mpf(ell)
            total = mpf(0)
            for k, a in enumerate(coeffs):
                e = nu + 2 * k
                # L[ℓ^e] = (e(e−1) + (n−1)e − K)·ℓ^{e−2} + Q1·ℓ^e
                total += a * ((e * (e + n - 2) - Kp) * x ** (e - 2) + Q1 * x**e)
            out.append(abs(total))
        return out


def series_residual(
    sol: SeriesSolution, K: float, ells: Sequence[float], dps: int | None = None
) -> list[float]:
    """
    Residual of the radial operator applied to the truncated series.

    Works in ``dps``-digit arithmetic (``working_precision`` when omitted),
    recomputing the root nearest to ``sol.nu`` and the coefficients there, so the
    surviving tail Q1·a_{2M}·ℓ^{ν+2M} is not swamped by rounding of the cancelling
    lower-order terms. Tails below the double range come back as 0.0;
    ``series_log_residual`` keeps them.
    """
    return [float(r) for r in _residuals(sol, K, ells, dps)]


def series_log_residual(
    sol: SeriesSolution, K: float, ells: Sequence[float], dps: int | None = None
) -> list[float]:
    """Natural log of ``series_residual``, taken before rounding to double."""
    residuals = _residuals(sol, K, ells, dps)
    with mp.workdps(dps or working_precision(sol, ells)):
        return [float(mp.log(r)) for r in residuals]


def series_residual_for_mode(
    cone: ConeParams,
    i: int,
    j: int,
    sol: SeriesSolution,
    ells: Sequence[float],
    dps: int | None = None,
) -> list[float]:
    return series_log_residual(sol, coupling_constant(cone, i, j), ells, dps)


def residual_slope(ells: Sequence[float], log_residuals: Sequence[float]) -> float:
    """Least-squares slope of log residual against log ℓ."""
    coef = np.polyfit(np.log(np.asarray(ells)), np.asarray(log_residuals), 1)
    return float(coef[0])
