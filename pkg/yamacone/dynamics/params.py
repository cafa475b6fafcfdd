"""Parameters of the autonomous planar system x' = y, y' = āx + b̄y − Q·x^α.

The system is obtained from the radial Yamabe equation L u = Q·u^α by the
substitution u(ℓ) = ℓ^{−2/(α−1)}·w(−ln ℓ).
"""

import math
from dataclasses import dataclass

from yamacone.errors import DomainError
from yamacone.geometry.cone import ConeParams, lambda_factor, mu_squared

# Tie band for α ≈ α*.
EPS_ALPHA = 1e-12


def critical_alpha(n: int) -> float:
    """α* = (n+2)/(n−2)."""
    return (n + 2) / (n - 2)


def eps_a_bar(n: int) -> float:
    """Tie band for ā ≈ 0."""
    return 1e-9 * max(1.0, (n - 2) ** 2)


def _a_bar(alpha: float, n: int, lambda_mode: float) -> float:
    d = alpha - 1
    return -4 / d**2 + 2 * (n - 2) / d + (n - 2) * lambda_mode / (4 * (n - 1))


def _b_bar(alpha: float, n: int) -> float:
    return (n - 2) - 4 / (alpha - 1)


def _check_alpha(alpha: float, n: int) -> None:
    if n < 3 or int(n) != n:
        raise DomainError(f"n must be an integer >= 3, got {n}")
    if not math.isfinite(alpha) or alpha <= 1:
        raise DomainError(f"alpha must exceed 1 (the linear case is spectral), got {alpha}")
    a_star = critical_alpha(n)
    if alpha - a_star > EPS_ALPHA:
        raise DomainError(
            f"alpha={alpha} exceeds the critical exponent (n+2)/(n-2) = {a_star} for n={n}"
        )


@dataclass(frozen=True)
class DynParams:
    """Coefficients of the reduced system.

    ``derived`` is False for raw coefficient sets; their ``lambda_mode`` is the Λ
    implied by ā, and ``mu_sq`` is read off the eigenvalue discriminant.
    """

    alpha: float
    Q: float
    n: int
    lambda_mode: float
    a_bar: float
    b_bar: float
    s: float
    shift: float
    mu_sq: float
    derived: bool = True

    @classmethod
    def from_lambda(cls, n: int, lambda_mode: float, alpha: float, Q: float) -> "DynParams":
        _check_alpha(alpha, n)
        mu_sq = 1 + lambda_mode / ((n - 1) * (n - 2))
        if mu_sq <= 0:
            raise DomainError(f"Lambda={lambda_mode} gives mu^2={mu_sq} <= 0")
        return cls(
            alpha=alpha,
            Q=Q,
            n=n,
            lambda_mode=lambda_mode,
            a_bar=_a_bar(alpha, n, lambda_mode),
            b_bar=_b_bar(alpha, n),
            s=(alpha - 1) * (n - 2) / 4,
            shift=2 / (alpha - 1),
            mu_sq=mu_sq,
        )

    @classmethod
    def from_raw(cls, a_bar: float, b_bar: float, Q: float, alpha: float, n: int) -> "DynParams":
        """Build from printed coefficients (ā, b̄, Q, α, n) without a cone."""
        _check_alpha(alpha, n)
        if b_bar > 0:
            raise DomainError(f"b_bar must be <= 0 for alpha in (1, alpha*], got {b_bar}")
        mu_sq = (b_bar**2 / 4 + a_bar) * 4 / (n - 2) ** 2
        if mu_sq <= 0:
            raise DomainError(
                f"b_bar^2/4 + a_bar = {b_bar**2 / 4 + a_bar} must be positive"
            )
        d = alpha - 1
        implied = (a_bar - (-4 / d**2 + 2 * (n - 2) / d)) * 4 * (n - 1) / (n - 2)
        return cls(
            alpha=alpha,
            Q=Q,
            n=n,
            lambda_mode=implied,
            a_bar=a_bar,
            b_bar=b_bar,
            s=d * (n - 2) / 4,
            shift=2 / d,
            mu_sq=mu_sq,
            derived=False,
        )

    @property
    def mu(self) -> float:
        return math.sqrt(self.mu_sq)

    @property
    def alpha_star(self) -> float:
        return critical_alpha(self.n)

    @property
    def is_critical(self) -> bool:
        return abs(self.alpha - self.alpha_star) < EPS_ALPHA

    @property
    def w1_discriminant(self) -> float:
        """b̄²/4 + ā; equals (n−2)²μ²/4 for derived parameters."""
        return self.b_bar**2 / 4 + self.a_bar

    @property
    def w2_discriminant(self) -> float:
        """b̄²/4 − ā(α−1)."""
        return self.b_bar**2 / 4 - self.a_bar * (self.alpha - 1)

    @property
    def plus_case(self) -> bool:
        return self.mu > 2 / (self.n - 2)


def dyn_params(cone: ConeParams, alpha: float, Q: float) -> DynParams:
    """Reduced-system parameters for a cone, nonlinearity exponent α and constant Q."""
    return DynParams.from_lambda(cone.n, lambda_factor(cone), alpha, Q)


def alpha_zero_from_mu(n: int, mu: float) -> float:
    """α₀ = 1 + 4/((n−2)(1+μ))."""
    return 1 + 4 / ((n - 2) * (1 + mu))


def alpha_zero(cone: ConeParams) -> float:
    """The exponent at which ā changes sign."""
    return alpha_zero_from_mu(cone.n, math.sqrt(mu_squared(cone)))


def s_zero(mu: float) -> float:
    """s₀ = 1/(1+μ), the root of ā(s) in (0, 1]."""
    return 1 / (1 + mu)


def s_zero_residual(cone: ConeParams) -> float:
    """Residual of (Λ/((n−1)(n−2)))·s² + 2s − 1 at s₀."""
    n = cone.n
    s0 = s_zero(math.sqrt(mu_squared(cone)))
    return abs(lambda_factor(cone) / ((n - 1) * (n - 2)) * s0**2 + 2 * s0 - 1)


def a_bar_of_s(s: float, n: int, lambda_mode: float) -> float:
    """ā as a function of s = (α−1)(n−2)/4."""
    return (n - 2) ** 2 / 4 * (2 / s - 1 / s**2) + (n - 2) * lambda_mode / (4 * (n - 1))


def b_bar_of_s(s: float, n: int) -> float:
    """b̄ = −(n−2)(1−s)/s."""
    return -(n - 2) * (1 - s) / s


def w2_discriminant_of_s(s: float, n: int, lambda_mode: float) -> float:
    """b̄²/4 − ā(α−1) as a function of s."""
    return b_bar_of_s(s, n) ** 2 / 4 - a_bar_of_s(s, n, lambda_mode) * 4 * s / (n - 2)
