"""Sobolev membership of power-law functions at the cone tip.

A function behaving like ℓ^q lies in H^k exactly when k < q + n/2.
"""

import math
from dataclasses import dataclass

from yamacone.errors import DomainError
from yamacone.geometry.cone import ConeParams, mu_squared, sphere_eigenvalue
from yamacone.spectral.modes import indicial_exponents

# Ties q + n/2 == k within this relative band count as "not a member".
TIE_REL_TOL = 1e-12


@dataclass(frozen=True)
class SobolevVerdict:
    exponent_q: float
    max_order: int
    in_L2: bool
    in_H1: bool
    in_H2: bool


@dataclass(frozen=True)
class ModeMembership:
    """Verdicts for both indicial branches of a mode."""

    plus_branch: SobolevVerdict
    minus_branch: SobolevVerdict


def _above(value: float, k: int) -> bool:
    return value - k > TIE_REL_TOL * max(1.0, abs(value))


def sobolev_verdict(exponent_q: float, n: int) -> SobolevVerdict:
    """Membership of u ~ ℓ^q in L2, H1, H2 on an n-dimensional cone."""
    if not math.isfinite(exponent_q):
        raise DomainError(f"exponent must be finite, got {exponent_q}")
    level = exponent_q + n / 2
    max_order = math.ceil(level) - 1
    if not _above(level, max_order):
        max_order -= 1
    return SobolevVerdict(
        exponent_q=exponent_q,
        max_order=max(max_order, -1),
        in_L2=_above(level, 0),
        in_H1=_above(level, 1),
        in_H2=_above(level, 2),
    )


def alpha_basic_exponent(alpha: float) -> float:
    """Exponent −2/(α−1) of an α-basic function."""
    if alpha <= 1:
        raise DomainError(f"alpha must exceed 1, got {alpha}")
    return -2 / (alpha - 1)


def alpha_basic_verdict(alpha: float, n: int) -> SobolevVerdict:
    """Membership of ℓ^{−2/(α−1)}; in L2 iff α > (n+4)/n."""
    return sobolev_verdict(alpha_basic_exponent(alpha), n)


def not_in_L2(q_bound: float) -> SobolevVerdict:
    """Verdict for a family growing faster than ℓ^{q_bound}, itself outside L2.

    ``exponent_q`` then holds the bound, not the (unknown) exponent.
    """
    return SobolevVerdict(
        exponent_q=q_bound, max_order=-1, in_L2=False, in_H1=False, in_H2=False
    )


def h2_threshold_holds(cone: ConeParams, i: int, j: int) -> bool:
    """μ² + 8/(n−2)²·(λ_i/r_p² + λ_j/r_q²) > 4/(n−2)²."""
    n = cone.n
    lhs = mu_squared(cone) + 8 / (n - 2) ** 2 * (
        sphere_eigenvalue(cone.p, i) / cone.r_p**2 + sphere_eigenvalue(cone.q, j) / cone.r_q**2
    )
    rhs = 4 / (n - 2) ** 2
    return lhs - rhs > TIE_REL_TOL * max(lhs, rhs)


def mode_membership_report(cone: ConeParams, i: int, j: int) -> ModeMembership:
    nu_minus, nu_plus = indicial_exponents(cone, i, j)
    return ModeMembership(
        plus_branch=sobolev_verdict(nu_plus, cone.n),
        minus_branch=sobolev_verdict(nu_minus, cone.n),
    )
