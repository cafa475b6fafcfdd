"""Phase-plane case classification and the solution families of each case."""

import math
from dataclasses import dataclass
from enum import Enum

from yamacone.dynamics.params import DynParams, eps_a_bar
from yamacone.geometry.cone import ConeParams, mu_squared
from yamacone.spectral.sobolev import (
    TIE_REL_TOL,
    SobolevVerdict,
    not_in_L2,
    sobolev_verdict,
)


class CaseId(str, Enum):
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C3PRIME = "C3prime"
    C4 = "C4"
    C5PLUS = "C5plus"
    C5MINUS = "C5minus"
    C6PLUS = "C6plus"
    C6MINUS = "C6minus"
    C7PLUS = "C7plus"
    C7MINUS = "C7minus"


_DESCRIPTIONS = {
    CaseId.C1: "a_bar < 0, Q < 0: w1 stable node, w2 saddle",
    CaseId.C2: "a_bar < 0, Q > 0: w1 stable node, no w2",
    CaseId.C3: "a_bar > 0, Q > 0, b_bar^2/4 - a_bar(alpha-1) < 0: w1 saddle, w2 stable focus",
    CaseId.C3PRIME: "a_bar > 0, Q > 0, b_bar^2/4 - a_bar(alpha-1) >= 0: w1 saddle, w2 stable node",
    CaseId.C4: "a_bar > 0, Q < 0: w1 saddle, no w2",
    CaseId.C5PLUS: "Q = 0, a_bar > 0: linear, w1 saddle",
    CaseId.C5MINUS: "Q = 0, a_bar <= 0: linear, w1 stable node",
    CaseId.C6PLUS: "a_bar = 0 (alpha = alpha0), Q > 0: w1 degenerate stable node",
    CaseId.C6MINUS: "a_bar = 0 (alpha = alpha0), Q < 0: w1 weak saddle",
    CaseId.C7PLUS: "alpha = alpha*, Q > 0: b_bar = 0, w2 center inside a homoclinic loop",
    CaseId.C7MINUS: "alpha = alpha*, Q < 0: b_bar = 0, w1 saddle, no w2",
}


@dataclass(frozen=True)
class CaseLabel:
    id: CaseId
    description: str


class FamilyKind(str, Enum):
    C_INFINITY = "C_infinity"
    C_ZERO = "C_zero"
    SEPARATRIX_S = "Separatrix_s"
    SEPARATRIX_INCOMING = "Separatrix_incoming"
    FOWLER = "Fowler"


@dataclass(frozen=True)
class FamilyDescriptor:
    """One family of positive radial solutions.

    ``w_exponent`` is the rate in t of the phase trajectory (0 when it tends to
    the constant x₂); ``u_exponent`` is q with u ~ ℓ^q.
    """

    family: FamilyKind
    w_exponent: float | None
    u_exponent: float | None
    verdict: SobolevVerdict | None
    notes: str = ""


def classify_case(dp: DynParams) -> CaseLabel:
    """Unique case label of the parameter set.

    Precedence: Q = 0 (exact), then α ≈ α*, then ā ≈ 0, then the signs of ā and Q.
    """
    if dp.Q == 0:
        cid = CaseId.C5PLUS if dp.a_bar > 0 else CaseId.C5MINUS
    elif dp.is_critical:
        cid = CaseId.C7PLUS if dp.Q > 0 else CaseId.C7MINUS
    elif abs(dp.a_bar) < eps_a_bar(dp.n):
        cid = CaseId.C6PLUS if dp.Q > 0 else CaseId.C6MINUS
    elif dp.a_bar < 0:
        cid = CaseId.C1 if dp.Q < 0 else CaseId.C2
    elif dp.Q < 0:
        cid = CaseId.C4
    else:
        cid = CaseId.C3 if dp.w2_discriminant < 0 else CaseId.C3PRIME
    return CaseLabel(id=cid, description=_DESCRIPTIONS[cid])


_FAMILIES: dict[CaseId, tuple[FamilyKind, ...]] = {
    CaseId.C1: (
        FamilyKind.C_INFINITY,
        FamilyKind.C_ZERO,
        FamilyKind.SEPARATRIX_INCOMING,
        FamilyKind.SEPARATRIX_S,
    ),
    CaseId.C2: (FamilyKind.C_ZERO, FamilyKind.SEPARATRIX_S),
    CaseId.C3: (FamilyKind.FOWLER, FamilyKind.SEPARATRIX_S),
    CaseId.C3PRIME: (FamilyKind.FOWLER, FamilyKind.SEPARATRIX_S),
    CaseId.C4: (FamilyKind.C_INFINITY, FamilyKind.SEPARATRIX_S),
    CaseId.C5PLUS: (FamilyKind.C_INFINITY, FamilyKind.SEPARATRIX_S),
    CaseId.C5MINUS: (FamilyKind.C_ZERO, FamilyKind.SEPARATRIX_S),
    CaseId.C6PLUS: (FamilyKind.C_ZERO, FamilyKind.SEPARATRIX_S),
    CaseId.C6MINUS: (FamilyKind.C_INFINITY, FamilyKind.SEPARATRIX_S),
    CaseId.C7PLUS: (FamilyKind.FOWLER, FamilyKind.SEPARATRIX_S),
    CaseId.C7MINUS: (FamilyKind.C_INFINITY, FamilyKind.SEPARATRIX_S),
}


def _w1_rates(dp: DynParams) -> tuple[float, float]:
    root = math.sqrt(dp.w1_discriminant)
    return dp.b_bar / 2 - root, dp.b_bar / 2 + root


def _with_rate(family: FamilyKind, dp: DynParams, rate: float, notes: str) -> FamilyDescriptor:
    q = -dp.shift - rate
    return FamilyDescriptor(family, rate, q, sobolev_verdict(q, dp.n), notes)


def _l2_threshold_reached(dp: DynParams) -> bool:
    """α ≤ (n+4)/n, i.e. the α-basic function itself is outside L2."""
    threshold = (dp.n + 4) / dp.n
    return dp.alpha - threshold <= TIE_REL_TOL * threshold


def _c_infinity(dp: DynParams, cid: CaseId) -> FamilyDescriptor:
    if cid is CaseId.C5PLUS:
        _, lam_plus = _w1_rates(dp)
        return _with_rate(
            FamilyKind.C_INFINITY, dp, lam_plus, "linear growth w ~ exp(lambda_plus t)"
        )
    verdict = not_in_L2(-dp.shift) if _l2_threshold_reached(dp) else None
    return FamilyDescriptor(
        FamilyKind.C_INFINITY, None, None, verdict, "grows faster than the alpha-basic function"
    )


def solution_families(
    dp: DynParams, label: CaseLabel, cone: ConeParams | None = None
) -> list[FamilyDescriptor]:
    """
    Families of positive radial solutions admitted by the case.

    Args:
        dp: Reduced-system parameters.
        label: ``classify_case(dp)``.
        cone: Cone the parameters came from; raw parameter sets pass None.

    Returns:
        Family descriptors in a fixed per-case order.
    """
    lam_minus, lam_plus = _w1_rates(dp)
    mu = math.sqrt(mu_squared(cone)) if cone is not None else dp.mu
    basic_q = -dp.shift
    families: list[FamilyDescriptor] = []
    for kind in _FAMILIES[label.id]:
        if kind is FamilyKind.SEPARATRIX_S:
            families.append(
                _with_rate(
                    kind,
                    dp,
                    lam_minus,
                    f"fast separatrix into w1; q + n/2 = 1 + (n-2)mu/2 with mu = {mu:.17g}",
                )
            )
        elif kind is FamilyKind.C_ZERO:
            notes = "tends to w1 along the slow direction"
            if label.id is CaseId.C6PLUS:
                notes = "tends to w1 slowly (algebraically in t); linear rate is 0"
            families.append(_with_rate(kind, dp, lam_plus, notes))
        elif kind is FamilyKind.C_INFINITY:
            families.append(_c_infinity(dp, label.id))
        elif kind is FamilyKind.SEPARATRIX_INCOMING:
            families.append(
                FamilyDescriptor(
                    kind,
                    0.0,
                    basic_q,
                    sobolev_verdict(basic_q, dp.n),
                    "two trajectories into the saddle w2; exactly alpha-basic",
                )
            )
        elif label.id is CaseId.C7PLUS:
            families.append(
                FamilyDescriptor(
                    kind,
                    None,
                    basic_q,
                    sobolev_verdict(basic_q, dp.n),
                    "periodic orbits around w2: x_min l^{-(n-2)/2} <= u <= x_max l^{-(n-2)/2}",
                )
            )
        else:
            families.append(
                FamilyDescriptor(
                    kind,
                    0.0,
                    basic_q,
                    sobolev_verdict(basic_q, dp.n),
                    "tends to w2; u ~ x2 l^{-2/(alpha-1)}",
                )
            )
    return families
