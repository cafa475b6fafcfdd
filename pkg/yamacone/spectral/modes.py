"""Fourier-mode analysis of the linear conformal Laplacian on the cone."""

import math
from dataclasses import dataclass
from enum import Enum

from loguru import logger

from yamacone.errors import DegenerateRootError, DomainError
from yamacone.geometry.cone import (
    ConeParams,
    conformal_coefficient,
    lambda_factor,
    mu_squared,
    sphere_eigenvalue,
)

DOUBLE_ROOT_TOL = 1e-14


class PositivityVerdict(str, Enum):
    """Sign behaviour of the quadratic form of the conformal Laplacian."""

    POSITIVE_DEFINITE = "PositiveDefinite"
    CONDITIONALLY_POSITIVE = "ConditionallyPositive"
    INDEFINITE = "Indefinite"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SpectralMode:
    """One Fourier mode (i, j) of the cone."""

    i: int
    j: int
    lambda_p: float
    lambda_q: float
    K: float
    nu_plus: float
    nu_minus: float
    # |n/2 + ν^{e±} − (1 ± (n−2)/2·√(...))|, max over both branches
    identity_residual: float = 0.0


def _check_indices(i: int, j: int) -> None:
    if i < 0 or j < 0:
        raise DomainError(f"mode indices must be nonnegative, got ({i}, {j})")


def coupling_constant(cone: ConeParams, i: int, j: int) -> float:
    """K_ij = (n−2)Λ/(4(n−1)) + 2λ_i^p/r_p² + 2λ_j^q/r_q²."""
    _check_indices(i, j)
    lam_p = sphere_eigenvalue(cone.p, i)
    lam_q = sphere_eigenvalue(cone.q, j)
    return (
        conformal_coefficient(cone.n) * lambda_factor(cone)
        + 2 * lam_p / cone.r_p**2
        + 2 * lam_q / cone.r_q**2
    )


def coupling_constant_rewritten(cone: ConeParams, i: int, j: int) -> float:
    """K_ij = 2λ_i^p/r_p² + 2λ_j^q/r_q² + (n−2)²(μ²−1)/4."""
    _check_indices(i, j)
    n = cone.n
    lam_p = sphere_eigenvalue(cone.p, i)
    lam_q = sphere_eigenvalue(cone.q, j)
    return (
        2 * lam_p / cone.r_p**2
        + 2 * lam_q / cone.r_q**2
        + (n - 2) ** 2 * (mu_squared(cone) - 1) / 4
    )


def _roots(h: float, K: float) -> tuple[float, float]:
    """Roots of ν² + 2hν − K = 0, computed without cancellation."""
    disc = h * h + K
    if disc < DOUBLE_ROOT_TOL:
        raise DegenerateRootError(
            f"indicial discriminant {disc:.3e} below {DOUBLE_ROOT_TOL}; double root at {-h}"
        )
    root = math.sqrt(disc)
    nu_minus = -h - root
    nu_plus = K / (h + root)
    return nu_minus, nu_plus


def indicial_exponents(cone: ConeParams, i: int, j: int) -> tuple[float, float]:
    """Return (ν^{e−}, ν^{e+}) = −(n−2)/2 ∓ √(((n−2)/2)² + K_ij)."""
    K = coupling_constant(cone, i, j)
    return _roots((cone.n - 2) / 2, K)


def odd_indicial_exponents(cone: ConeParams, i: int, j: int) -> tuple[float, float]:
    """Return (ν^{o−}, ν^{o+}) = −n/2 ∓ √(n²/4 + K_ij − (n−1)).

    These equal ν^{e±} − 1, so the odd-index expansion reproduces the even one.
    """
    n = cone.n
    K = coupling_constant(cone, i, j)
    disc = n * n / 4 + K - (n - 1)
    if disc < DOUBLE_ROOT_TOL:
        raise DegenerateRootError(f"odd indicial discriminant {disc:.3e} below {DOUBLE_ROOT_TOL}")
    root = math.sqrt(disc)
    return -n / 2 - root, -n / 2 + root


def spectral_mode(cone: ConeParams, i: int, j: int) -> SpectralMode:
    n = cone.n
    lam_p = sphere_eigenvalue(cone.p, i)
    lam_q = sphere_eigenvalue(cone.q, j)
    K = coupling_constant(cone, i, j)
    nu_minus, nu_plus = indicial_exponents(cone, i, j)
    radical = math.sqrt(
        mu_squared(cone) + 8 / (n - 2) ** 2 * (lam_p / cone.r_p**2 + lam_q / cone.r_q**2)
    )
    residual = max(
        abs(n / 2 + nu_plus - (1 + (n - 2) / 2 * radical)),
        abs(n / 2 + nu_minus - (1 - (n - 2) / 2 * radical)),
    )
    return SpectralMode(
        i=i,
        j=j,
        lambda_p=lam_p,
        lambda_q=lam_q,
        K=K,
        nu_plus=nu_plus,
        nu_minus=nu_minus,
        identity_residual=residual,
    )


def spectral_table(cone: ConeParams, i_max: int, j_max: int) -> list[SpectralMode]:
    """All modes with 0 <= i <= i_max, 0 <= j <= j_max in lexicographic order."""
    return [spectral_mode(cone, i, j) for i in range(i_max + 1) for j in range(j_max + 1)]


def scan_window(cone: ConeParams, i_max: int, j_max: int) -> list[tuple[int, int, float]]:
    """Brute-force scan of the window for modes with K_ij <= 0."""
    found = []
    for i in range(i_max + 1):
        for j in range(j_max + 1):
            K = coupling_constant(cone, i, j)
            if K <= 0:
                found.append((i, j, K))
    return found


def negative_modes(cone: ConeParams, i_max: int, j_max: int) -> list[tuple[int, int, float]]:
    """
    Enumerate modes with K_ij <= 0 inside the window.

    K_ij is strictly increasing in both indices, so each row stops at its first
    positive entry and the scan ends at the first row whose j = 0 entry is positive.

    Returns:
        (i, j, K_ij) triples in lexicographic order.
    """
    _check_indices(i_max, j_max)
    found: list[tuple[int, int, float]] = []
    for i in range(i_max + 1):
        if coupling_constant(cone, i, 0) > 0:
            break
        for j in range(j_max + 1):
            K = coupling_constant(cone, i, j)
            if K > 0:
                break
            found.append((i, j, K))
        else:
            logger.warning(f"row i={i} is nonpositive up to j_max={j_max}; widen the window")
    else:
        logger.warning(f"nonpositive modes reach i_max={i_max}; widen the window")
    return found


def neg_conditions(cone: ConeParams) -> tuple[bool, bool]:
    """
    K_10 > 0 and K_01 > 0 written as inequalities in the sphere terms.

    Both read 4(n−1)/(n−2)·d/r_d² + p(p−1)/r_p² + q(q−1)/r_q² > (n−1)(n−2)/2
    with (d, r_d) = (p, r_p) and (q, r_q) respectively.
    """
    n, p, q = cone.n, cone.p, cone.q
    terms = p * (p - 1) / cone.r_p**2 + q * (q - 1) / cone.r_q**2
    bound = (n - 1) * (n - 2) / 2
    weight = 4 * (n - 1) / (n - 2)
    return (
        weight * p / cone.r_p**2 + terms > bound,
        weight * q / cone.r_q**2 + terms > bound,
    )


def positivity_report(cone: ConeParams, integral_R_positive: bool) -> PositivityVerdict:
    """Classify the quadratic form ⟨L u, u⟩.

    Args:
        cone: Cone at the singular point.
        integral_R_positive: Sign of the total scalar curvature of the manifold,
            supplied by the caller.
    """
    if lambda_factor(cone) > 0:
        return PositivityVerdict.POSITIVE_DEFINITE
    if coupling_constant(cone, 1, 0) > 0 and coupling_constant(cone, 0, 1) > 0:
        if integral_R_positive:
            return PositivityVerdict.CONDITIONALLY_POSITIVE
        return PositivityVerdict.INDEFINITE
    return PositivityVerdict.UNKNOWN
