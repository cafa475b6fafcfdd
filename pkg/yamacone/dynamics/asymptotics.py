"""Asymptotic exponents, the critical first integral and the u <-> w transform."""

import math
from collections.abc import Iterable
from dataclasses import dataclass

from yamacone.dynamics.params import DynParams
from yamacone.errors import DomainError
from yamacone.geometry.cone import CaseSign, ConeParams, case_sign, mu_squared

# Statements of the radial result print the separatrix rate with the opposite sign;
# reports carry this flag next to the derived exponent.
SIGMA_SIGN_NOTE = (
    "separatrix exponent derived case by case is +sigma; the summary statement prints -sigma"
)


def sigma_from_mu(n: int, mu: float) -> float:
    return (n - 2) / 2 * (mu - 1)


def sigma_exponent(cone: ConeParams) -> float:
    """σ = (n−2)(μ−1)/2, the exponent of the fast separatrix solution."""
    return sigma_from_mu(cone.n, math.sqrt(mu_squared(cone)))


def first_integral(dp: DynParams, x: float, y: float) -> float:
    """I(x, y) = y²/2 − āx²/2 + Q·x^{α+1}/(α+1), conserved when α = α*."""
    if not dp.is_critical:
        raise DomainError(f"first integral needs alpha = alpha* = {dp.alpha_star}, got {dp.alpha}")
    if x < 0:
        raise DomainError(f"first integral is defined for x >= 0, got x={x}")
    a = dp.alpha
    return y * y / 2 - dp.a_bar * x * x / 2 + dp.Q * x ** (a + 1) / (a + 1)


def first_integral_at_w2(dp: DynParams) -> float:
    """−(Q/n)(ā/Q)^{n/2}."""
    if not dp.is_critical or dp.Q == 0 or dp.a_bar / dp.Q <= 0:
        raise DomainError("w2 exists at the critical exponent only when a_bar/Q > 0")
    return -(dp.Q / dp.n) * (dp.a_bar / dp.Q) ** (dp.n / 2)


def u_from_w(
    alpha: float, t_samples: Iterable[tuple[float, float]]
) -> list[tuple[float, float]]:
    """Map (t, w) samples to (ℓ, u) with ℓ = e^{−t} and u = ℓ^{−2/(α−1)}·w."""
    if alpha <= 1:
        raise DomainError(f"alpha must exceed 1, got {alpha}")
    power = -2 / (alpha - 1)
    out = []
    for t, w in t_samples:
        ell = math.exp(-t)
        out.append((ell, ell**power * w))
    out.reverse()
    return out


@dataclass(frozen=True)
class PerturbationCheck:
    """Local bounds on the nonlinearity f(x) = −Q·x^α near the origin."""

    delta: float
    rho: float
    growth_constant: float
    lipschitz: float
    small: bool


def perturbation_conditions(
    dp: DynParams, delta: float, threshold: float = 1e-2
) -> PerturbationCheck:
    """
    |Q·x^α| ≤ L·|x|^{1+ρ} with ρ = α−1, L = |Q|, and the Lipschitz bound α|Q|δ^{α−1}.

    Args:
        dp: Reduced-system parameters.
        delta: Radius of the neighbourhood of w₁.
        threshold: Level below which the Lipschitz bound counts as small.
    """
    if delta <= 0:
        raise DomainError(f"delta must be positive, got {delta}")
    lipschitz = dp.alpha * abs(dp.Q) * delta ** (dp.alpha - 1)
    return PerturbationCheck(
        delta=delta,
        rho=dp.alpha - 1,
        growth_constant=abs(dp.Q),
        lipschitz=lipschitz,
        small=lipschitz < threshold,
    )


@dataclass(frozen=True)
class RadialSummary:
    sigma: float
    separatrix_in_H1: bool
    separatrix_in_H2: bool
    other_L2_excluded: bool
    fowler_in_L2_not_H1: bool
    printed_exponent: float
    note: str = SIGMA_SIGN_NOTE


def radial_asymptotics(cone: ConeParams, alpha: float, Q: float) -> RadialSummary:
    """Summary of the radial solutions near the tip for (cone, α, Q)."""
    n = cone.n
    sigma = sigma_exponent(cone)
    threshold = (n + 4) / n
    return RadialSummary(
        sigma=sigma,
        separatrix_in_H1=True,
        separatrix_in_H2=case_sign(cone) is CaseSign.PLUS,
        other_L2_excluded=alpha <= threshold,
        fowler_in_L2_not_H1=Q > 0 and alpha > threshold,
        printed_exponent=-sigma,
    )


@dataclass(frozen=True)
class MetricAsymptotic:
    """Yamabe metric ǧ = u^{4/(n−2)}·g near the tip with u ~ ℓ^σ."""

    u_exponent: float
    conformal_factor_exponent: float
    printed_exponent: float
    sign_discrepancy: bool
    note: str = SIGMA_SIGN_NOTE


def yamabe_metric_asymptotic(cone: ConeParams) -> MetricAsymptotic:
    sigma = sigma_exponent(cone)
    return MetricAsymptotic(
        u_exponent=sigma,
        conformal_factor_exponent=4 * sigma / (cone.n - 2),
        printed_exponent=-sigma,
        sign_discrepancy=sigma != 0,
    )
