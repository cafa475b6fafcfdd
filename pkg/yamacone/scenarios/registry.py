"""
Scenario registry: the parameter sets behind the reference phase portraits.

Each entry writes out all fields. A scenario carries either a cone (p, q, r_p, r_q)
or raw coefficients (ā, b̄, n); α and Q are always given. Figure entries are
read-only; user scenarios come from ``yamacone.config.loader.load_config``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Any

from yamacone.dynamics.params import DynParams, dyn_params
from yamacone.errors import DomainError
from yamacone.geometry.cone import ConeParams


class ScenarioSource(str, Enum):
    FIGURE = "Figure"
    USER_CONFIG = "UserConfig"


@dataclass(frozen=True)
class RawCoefficients:
    """Printed system coefficients, used without a cone."""

    a_bar: float
    b_bar: float
    n: int


@dataclass(frozen=True)
class Scenario:
    name: str
    source: ScenarioSource
    alpha: float
    Q: float
    cone: ConeParams | None = None
    raw: RawCoefficients | None = None
    notes: str = ""
    caption_case: str = ""  # case the figure caption names, e.g. "C1"

    def __post_init__(self) -> None:
        if (self.cone is None) == (self.raw is None):
            raise DomainError(
                f"scenario {self.name!r} must give exactly one of cone or raw coefficients"
            )

    def dyn_params(self) -> DynParams:
        if self.cone is not None:
            return dyn_params(self.cone, self.alpha, self.Q)
        raw = self.raw
        return DynParams.from_raw(raw.a_bar, raw.b_bar, self.Q, self.alpha, raw.n)

    def inputs(self) -> dict[str, Any]:
        """Flat key/value echo in the scenario-file schema."""
        data: dict[str, Any] = {"name": self.name}
        if self.cone is not None:
            data.update(p=self.cone.p, q=self.cone.q, rp=self.cone.r_p, rq=self.cone.r_q)
        else:
            data.update(a_bar=self.raw.a_bar, b_bar=self.raw.b_bar, n=self.raw.n)
        data.update(alpha=self.alpha, Q=self.Q)
        if self.notes:
            data["notes"] = self.notes
        return data


_SQRT2 = math.sqrt(2.0)
# S^1 x S^5 with r_q^2 = 4/3 gives Λ = 0 in dimension 7
_R_Q_FLAT7 = math.sqrt(4.0 / 3.0)

# ---------------------------------------------------------------------------
# FIGURES, in portrait order.
# ---------------------------------------------------------------------------

FIGURES: tuple[Scenario, ...] = (
    Scenario(
        name="fig7_1",
        source=ScenarioSource.FIGURE,
        alpha=1.2,
        Q=-10.0,
        cone=ConeParams(p=1, q=5, r_p=1.0, r_q=_R_Q_FLAT7),
        raw=None,
        notes="printed y' = -50x - 15y + 10x^1.2; n=7, Lambda=0, s=1/4",
        caption_case="C1",
    ),
    Scenario(
        name="fig7_2",
        source=ScenarioSource.FIGURE,
        alpha=1.2,
        Q=10.0,
        cone=ConeParams(p=1, q=5, r_p=1.0, r_q=_R_Q_FLAT7),
        raw=None,
        notes="printed y' = -50x - 15y - 10x^1.2; n=7, Lambda=0, s=1/4",
        caption_case="C2",
    ),
    Scenario(
        name="fig7_3",
        source=ScenarioSource.FIGURE,
        alpha=1.6,
        Q=5.0,
        cone=None,
        raw=RawCoefficients(a_bar=5.5, b_bar=-5.0 / 3.0, n=7),
        notes=(
            "printed y' = 5.5x - (5/3)y - 5x^1.6; n=7, Lambda=0 gives a_bar = 5.5555555555555554; "
            "caption s=1/4 differs from s=3/4 at alpha=1.6"
        ),
        caption_case="C3",
    ),
    Scenario(
        name="fig7_3p",
        source=ScenarioSource.FIGURE,
        alpha=1.56,
        Q=5.0,
        cone=ConeParams(p=3, q=3, r_p=_SQRT2, r_q=_SQRT2),
        raw=None,
        notes=(
            "printed y' = 5.5x - 2.15y - 5x^1.56 has b_bar^2/4 - a_bar(alpha-1) < 0, "
            "contradicting its caption; realized by the cone S^3(sqrt2) x S^3(sqrt2) "
            "(Lambda=-18) where the discriminant is positive"
        ),
        caption_case="C3prime",
    ),
    Scenario(
        name="fig7_4",
        source=ScenarioSource.FIGURE,
        alpha=1.6,
        Q=-5.0,
        cone=None,
        raw=RawCoefficients(a_bar=5.5, b_bar=-5.0 / 3.0, n=7),
        notes="printed y' = 5.5x - (5/3)y + 5x^1.6; derived a_bar = 5.5555555555555554, s=3/4",
        caption_case="C4",
    ),
    Scenario(
        name="fig7_5p",
        source=ScenarioSource.FIGURE,
        alpha=1.6,
        Q=0.0,
        cone=None,
        raw=RawCoefficients(a_bar=5.5, b_bar=-5.0 / 3.0, n=7),
        notes="printed y' = 5.5x - (5/3)y; linear, derived a_bar = 5.5555555555555554",
        caption_case="C5plus",
    ),
    Scenario(
        name="fig7_5m",
        source=ScenarioSource.FIGURE,
        alpha=1.2,
        Q=0.0,
        cone=None,
        raw=RawCoefficients(a_bar=-50.0, b_bar=-15.0, n=7),
        notes="printed y' = -50x - 15y; linear",
        caption_case="C5minus",
    ),
    Scenario(
        name="fig7_6p",
        source=ScenarioSource.FIGURE,
        alpha=1.4,
        Q=5.0,
        cone=None,
        raw=RawCoefficients(a_bar=0.0, b_bar=-5.0, n=7),
        notes="printed y' = -5y - 5x^1.4; alpha = alpha0 = 1.4 for n=7, Lambda=0",
        caption_case="C6plus",
    ),
    Scenario(
        name="fig7_6m",
        source=ScenarioSource.FIGURE,
        alpha=1.4,
        Q=-5.0,
        cone=None,
        raw=RawCoefficients(a_bar=0.0, b_bar=-5.0, n=7),
        notes="printed y' = -5y + 5x^1.4; alpha = alpha0 = 1.4 for n=7, Lambda=0",
        caption_case="C6minus",
    ),
    Scenario(
        name="fig7_7p",
        source=ScenarioSource.FIGURE,
        alpha=1.8,
        Q=1.0,
        cone=None,
        raw=RawCoefficients(a_bar=1.0, b_bar=0.0, n=7),
        notes=(
            "printed y' = -5y - 5x^1.6 is not a critical-exponent system; "
            "realized as y' = x - x^1.8 (alpha* = 9/5 for n=7), mirroring fig7_7m"
        ),
        caption_case="C7plus",
    ),
    Scenario(
        name="fig7_7m",
        source=ScenarioSource.FIGURE,
        alpha=1.8,
        Q=-1.0,
        cone=None,
        raw=RawCoefficients(a_bar=1.0, b_bar=0.0, n=7),
        notes="printed y' = x + x^1.8; alpha* = 9/5 for n=7",
        caption_case="C7minus",
    ),
)


def find_by_name(name: str) -> Scenario | None:
    """Find a figure scenario by name, e.g. "fig7_1"."""
    for spec in FIGURES:
        if spec.name == name:
            return spec
    return None


def figure_names() -> list[str]:
    return [spec.name for spec in FIGURES]
