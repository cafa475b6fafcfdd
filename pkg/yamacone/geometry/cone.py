"""Closed-form geometry of the cone over S^p(r_p) x S^q(r_q)."""

import math
from dataclasses import dataclass
from enum import Enum

from loguru import logger

from yamacone.errors import DomainError

# Relative tie tolerance for the plus/minus predicate.
BOUNDARY_REL_TOL = 1e-12


class CaseSign(str, Enum):
    """Plus/minus dichotomy of the cone."""

    PLUS = "Plus"
    MINUS = "Minus"
    BOUNDARY = "Boundary"


@dataclass(frozen=True)
class ConeParams:
    """Geometric input of a tame conical singularity."""

    p: int
    q: int
    r_p: float
    r_q: float

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or int(self.p) != self.p or self.p < 1:
            raise DomainError(f"p must be a positive integer, got {self.p}")
        if isinstance(self.q, bool) or int(self.q) != self.q or self.q < 1:
            raise DomainError(f"q must be a positive integer, got {self.q}")
        for name, r in (("r_p", self.r_p), ("r_q", self.r_q)):
            if not math.isfinite(r) or r <= 0:
                raise DomainError(f"{name} must be a positive real, got {r}")
        if self.n < 5:
            logger.warning(
                f"cone dimension n={self.n} < 5; several asymptotic results assume n >= 5"
            )

    @property
    def n(self) -> int:
        return int(self.p) + int(self.q) + 1


@dataclass(frozen=True)
class GeometrySummary:
    """Derived constants of a cone."""

    n: int
    lambda_: float
    mu_sq: float
    case: CaseSign
    lambda_residual: float
    mu_sq_residual: float


@dataclass(frozen=True)
class LambdaExtrema:
    """Extremal analysis of Λ as a function of continuous p."""

    p_min: float
    q_min: float
    lambda_min: float
    lambda_p1: float
    lambda_pn2: float


def _sphere_terms(cone: ConeParams) -> float:
    p, q = cone.p, cone.q
    return p * (p - 1) / cone.r_p**2 + q * (q - 1) / cone.r_q**2


def lambda_factor(cone: ConeParams) -> float:
    """Curvature factor Λ with R = Λ/ℓ² on the cone (direct form)."""
    p, q = cone.p, cone.q
    rp2, rq2 = cone.r_p**2, cone.r_q**2
    return p * (p - 1) * (2 - rp2) / rp2 + q * (q - 1) * (2 - rq2) / rq2 - 2 * p * q


def lambda_factor_appendix(cone: ConeParams) -> float:
    """Λ = −(n−1)(n−2) + 2[p(p−1)/r_p² + q(q−1)/r_q²]."""
    n = cone.n
    return -(n - 1) * (n - 2) + 2 * _sphere_terms(cone)


def lambda_of_p(p: float, n: int, r_p: float, r_q: float) -> float:
    """Λ for real-valued p with q = n − 1 − p."""
    q = n - 1 - p
    return -(n - 1) * (n - 2) + 2 * (p * (p - 1) / r_p**2 + q * (q - 1) / r_q**2)


def mu_squared(cone: ConeParams) -> float:
    """μ² = 1 + Λ/((n−1)(n−2))."""
    n = cone.n
    return 1 + lambda_factor(cone) / ((n - 1) * (n - 2))


def mu_squared_direct(cone: ConeParams) -> float:
    """μ² from the sphere terms alone; zero exactly when p = q = 1, positive otherwise."""
    n = cone.n
    return 2 * _sphere_terms(cone) / ((n - 1) * (n - 2))


def scalar_curvature(cone: ConeParams, ell: float) -> float:
    """Scalar curvature Λ/ℓ² at distance ℓ from the tip."""
    if ell <= 0:
        raise DomainError(f"scalar curvature is singular at ell={ell}; need ell > 0")
    return lambda_factor(cone) / ell**2


def volume_density(cone: ConeParams, ell: float) -> float:
    """Radial density r_p^p r_q^q ℓ^{n−1} / 2^{(n−1)/2} (sphere measures excluded)."""
    if ell <= 0:
        raise DomainError(f"volume density needs ell > 0, got {ell}")
    n = cone.n
    return cone.r_p**cone.p * cone.r_q**cone.q * ell ** (n - 1) / 2 ** ((n - 1) / 2)


def sphere_eigenvalue(dim: int, k: int) -> float:
    """k-th distinct eigenvalue k(k + dim − 1) of the unit-sphere Laplacian."""
    if dim < 1 or k < 0:
        raise DomainError(f"need dim >= 1 and k >= 0, got dim={dim}, k={k}")
    return float(k * (k + dim - 1))


def lambda_extrema(n: int, r_p: float, r_q: float) -> LambdaExtrema:
    """Continuous minimizer of Λ(p) and its endpoint values."""
    if n < 3 or r_p <= 0 or r_q <= 0:
        raise DomainError(f"need n >= 3 and positive radii, got n={n}, r_p={r_p}, r_q={r_q}")
    p_min = 0.5 + (n - 2) / (1 + r_q**2 / r_p**2)
    lambda_min = (
        -(n - 1) * (n - 2)
        - 0.5 * (r_p**-2 + r_q**-2)
        + 2 * (n - 2) ** 2 / (r_p**2 + r_q**2)
    )
    return LambdaExtrema(
        p_min=p_min,
        q_min=(n - 1) - p_min,
        lambda_min=lambda_min,
        lambda_p1=lambda_of_p(1.0, n, r_p, r_q),
        lambda_pn2=lambda_of_p(float(n - 2), n, r_p, r_q),
    )


def case_sign(cone: ConeParams) -> CaseSign:
    """Plus when p(p−1)/r_p² + q(q−1)/r_q² > 2(n−1)/(n−2), Minus when below."""
    n = cone.n
    lhs = _sphere_terms(cone)
    rhs = 2 * (n - 1) / (n - 2)
    if abs(lhs - rhs) <= BOUNDARY_REL_TOL * max(abs(lhs), abs(rhs)):
        return CaseSign.BOUNDARY
    return CaseSign.PLUS if lhs > rhs else CaseSign.MINUS


def plus_case_lambda_threshold(n: int) -> float:
    """Λ above which a cone of dimension n is in the plus-case."""
    return -n * (n - 1) * (n - 4) / (n - 2)


def conformal_coefficient(n: int) -> float:
    """Zeroth-order weight (n−2)/(4(n−1)) of the conformal Laplacian."""
    return (n - 2) / (4 * (n - 1))


def conformal_potential(cone: ConeParams, ell: float) -> float:
    """Potential term (n−2)/(4(n−1))·R of the conformal Laplacian at ℓ."""
    return conformal_coefficient(cone.n) * scalar_curvature(cone, ell)


def summarize(cone: ConeParams) -> GeometrySummary:
    lam = lambda_factor(cone)
    mu_sq = mu_squared(cone)
    return GeometrySummary(
        n=cone.n,
        lambda_=lam,
        mu_sq=mu_sq,
        case=case_sign(cone),
        lambda_residual=abs(lam - lambda_factor_appendix(cone)),
        mu_sq_residual=abs(mu_sq - mu_squared_direct(cone)),
    )
