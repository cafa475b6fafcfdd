"""Equilibria of the reduced system and their linearizations."""

import cmath
from dataclasses import dataclass
from enum import Enum

import numpy as np

from yamacone.dynamics.params import DynParams, eps_a_bar
from yamacone.errors import DomainError


class EquilibriumKind(str, Enum):
    SADDLE = "Saddle"
    STABLE_FOCUS = "StableFocus"
    STABLE_NODE = "StableNode"
    CENTER = "Center"
    DEGENERATE_NODE = "DegenerateNode"
    WEAK_SADDLE = "WeakSaddle"


@dataclass(frozen=True)
class Equilibrium:
    """A rest point with eigenpairs (λ_−, λ_+) of the companion-matrix linearization.

    Eigenvectors are (1, λ); index 0 is the minus root, index 1 the plus root.
    """

    name: str
    location: tuple[float, float]
    eigvals: tuple[complex, complex]
    eigvecs: tuple[tuple[complex, complex], tuple[complex, complex]]
    kind: EquilibriumKind

    @property
    def has_real_pair(self) -> bool:
        return all(ev.imag == 0 for ev in self.eigvals)

    def direction(self, index: int) -> np.ndarray:
        """Unit eigenvector for eigenvalue ``index`` (0 = minus, 1 = plus), with x > 0."""
        if self.eigvals[index].imag != 0:
            raise DomainError(f"eigenvalue {self.eigvals[index]} of {self.name} is not real")
        v = np.array([1.0, self.eigvals[index].real])
        return v / np.linalg.norm(v)


def jacobian(dp: DynParams, x: float) -> np.ndarray:
    """Analytic Jacobian [[0, 1], [ā − αQx^{α−1}, b̄]] at (x, ·)."""
    slope = dp.a_bar - dp.alpha * dp.Q * x ** (dp.alpha - 1) if x > 0 else dp.a_bar
    return np.array([[0.0, 1.0], [slope, dp.b_bar]])


def _eigenpairs(c: float, trace: float) -> tuple[tuple[complex, complex], tuple]:
    root = cmath.sqrt(trace**2 / 4 + c)
    lam_minus = trace / 2 - root
    lam_plus = trace / 2 + root
    return (lam_minus, lam_plus), ((1 + 0j, lam_minus), (1 + 0j, lam_plus))


def _kind_w1(dp: DynParams) -> EquilibriumKind:
    if abs(dp.a_bar) < eps_a_bar(dp.n):
        return EquilibriumKind.WEAK_SADDLE if dp.Q < 0 else EquilibriumKind.DEGENERATE_NODE
    if dp.a_bar > 0:
        return EquilibriumKind.SADDLE
    disc = dp.w1_discriminant
    if disc > 0:
        return EquilibriumKind.STABLE_NODE
    if disc < 0:
        return EquilibriumKind.STABLE_FOCUS
    return EquilibriumKind.DEGENERATE_NODE


def _kind_w2(dp: DynParams) -> EquilibriumKind:
    if dp.a_bar < 0:
        return EquilibriumKind.SADDLE
    if dp.is_critical or dp.b_bar == 0:
        return EquilibriumKind.CENTER
    disc = dp.w2_discriminant
    if disc < 0:
        return EquilibriumKind.STABLE_FOCUS
    if disc > 0:
        return EquilibriumKind.STABLE_NODE
    return EquilibriumKind.DEGENERATE_NODE


def w2_location(dp: DynParams) -> float | None:
    """x₂ = (ā/Q)^{1/(α−1)} when ā/Q > 0, else None."""
    if dp.Q == 0 or dp.a_bar / dp.Q <= 0:
        return None
    return (dp.a_bar / dp.Q) ** (1 / (dp.alpha - 1))


def equilibria(dp: DynParams) -> list[Equilibrium]:
    """w₁ = (0, 0) and, when ā/Q > 0, w₂ = (x₂, 0)."""
    vals, vecs = _eigenpairs(dp.a_bar, dp.b_bar)
    result = [Equilibrium("w1", (0.0, 0.0), vals, vecs, _kind_w1(dp))]
    x2 = w2_location(dp)
    if x2 is not None:
        # ā − αQx₂^{α−1} = −ā(α−1)
        vals, vecs = _eigenpairs(-dp.a_bar * (dp.alpha - 1), dp.b_bar)
        result.append(Equilibrium("w2", (x2, 0.0), vals, vecs, _kind_w2(dp)))
    return result


def find_equilibrium(dp: DynParams, name: str) -> Equilibrium | None:
    for eq in equilibria(dp):
        if eq.name == name:
            return eq
    return None
