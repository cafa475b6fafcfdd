"""Assemble reports from scenarios and cones.

Every section is a plain dict of JSON-ready values; numeric results carry their
residual or tolerance next to them.
"""

import dataclasses
import math
from enum import Enum
from typing import Any

from yamacone.dynamics.asymptotics import radial_asymptotics, yamabe_metric_asymptotic
from yamacone.dynamics.cases import classify_case, solution_families
from yamacone.dynamics.equilibria import equilibria
from yamacone.dynamics.params import DynParams, alpha_zero, s_zero, s_zero_residual
from yamacone.engine.integrator import vector_field
from yamacone.geometry.cone import (
    ConeParams,
    lambda_extrema,
    plus_case_lambda_threshold,
    summarize,
)
from yamacone.scenarios.registry import Scenario
from yamacone.spectral.modes import neg_conditions, negative_modes, spectral_table
from yamacone.spectral.sobolev import mode_membership_report


def to_jsonable(obj: Any) -> Any:
    """Dataclasses, enums, complex numbers and tuples to JSON-ready values.

    Non-finite floats become None.
    """
    if isinstance(obj, Enum):
        return obj.value
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: to_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, complex):
        return [to_jsonable(obj.real), to_jsonable(obj.imag)]
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else None
    return to_jsonable(float(obj))


@dataclasses.dataclass
class Report:
    inputs: dict[str, Any]
    geometry: dict[str, Any] | None = None
    spectral: dict[str, Any] | None = None
    dynamics: dict[str, Any] | None = None
    equilibria: list[dict[str, Any]] | None = None
    case: dict[str, Any] | None = None
    families: list[dict[str, Any]] | None = None
    asymptotics: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        data = {f.name: getattr(self, f.name) for f in dataclasses.fields(self)}
        return to_jsonable({k: v for k, v in data.items() if v is not None})


def cone_inputs(cone: ConeParams) -> dict[str, Any]:
    return {"p": cone.p, "q": cone.q, "rp": cone.r_p, "rq": cone.r_q}


def geometry_section(cone: ConeParams) -> dict[str, Any]:
    summary = summarize(cone)
    extrema = lambda_extrema(cone.n, cone.r_p, cone.r_q)
    return {
        "n": summary.n,
        "lambda": summary.lambda_,
        "lambda_residual": summary.lambda_residual,
        "mu_sq": summary.mu_sq,
        "mu_sq_residual": summary.mu_sq_residual,
        "case": summary.case,
        "plus_case_lambda_threshold": plus_case_lambda_threshold(cone.n),
        "alpha_zero": alpha_zero(cone),
        "s_zero": s_zero(math.sqrt(summary.mu_sq)),
        "s_zero_residual": s_zero_residual(cone),
        "lambda_extrema": extrema,
    }


def spectral_section(cone: ConeParams, i_max: int, j_max: int) -> dict[str, Any]:
    modes = []
    for mode in spectral_table(cone, i_max, j_max):
        entry = to_jsonable(mode)
        membership = mode_membership_report(cone, mode.i, mode.j)
        entry["plus_branch"] = to_jsonable(membership.plus_branch)
        entry["minus_branch"] = to_jsonable(membership.minus_branch)
        modes.append(entry)
    k10_positive, k01_positive = neg_conditions(cone)
    return {
        "window": [i_max, j_max],
        "modes": modes,
        "negative_modes": [
            {"i": i, "j": j, "K": K} for i, j, K in negative_modes(cone, i_max, j_max)
        ],
        "K10_positive": k10_positive,
        "K01_positive": k01_positive,
    }


def dynamics_section(dp: DynParams) -> dict[str, Any]:
    data = to_jsonable(dp)
    data["mu"] = dp.mu
    data["alpha_star"] = dp.alpha_star
    data["w1_discriminant"] = dp.w1_discriminant
    data["w2_discriminant"] = dp.w2_discriminant
    data["w1_identity_residual"] = abs(dp.w1_discriminant - (dp.n - 2) ** 2 * dp.mu_sq / 4)
    data["plus_case"] = dp.plus_case
    return data


def equilibria_section(dp: DynParams) -> list[dict[str, Any]]:
    entries = []
    for eq in equilibria(dp):
        x, y = eq.location
        fx, fy = vector_field(dp, x, y)
        entry = to_jsonable(eq)
        entry["residual"] = max(abs(fx), abs(fy))
        entries.append(entry)
    return entries


def classify_report(scenario: Scenario) -> Report:
    """Geometry (when a cone is given), reduced system, equilibria, case and families."""
    dp = scenario.dyn_params()
    label = classify_case(dp)
    report = Report(
        inputs=scenario.inputs(),
        dynamics=dynamics_section(dp),
        equilibria=equilibria_section(dp),
        case={"id": label.id, "description": label.description},
        families=[to_jsonable(f) for f in solution_families(dp, label, scenario.cone)],
    )
    if scenario.cone is not None:
        report.geometry = geometry_section(scenario.cone)
        report.asymptotics = {
            "radial": to_jsonable(radial_asymptotics(scenario.cone, scenario.alpha, scenario.Q)),
            "metric": to_jsonable(yamabe_metric_asymptotic(scenario.cone)),
        }
    return report


def geometry_report(cone: ConeParams) -> Report:
    return Report(inputs=cone_inputs(cone), geometry=geometry_section(cone))


def spectral_report(cone: ConeParams, i_max: int, j_max: int) -> Report:
    return Report(
        inputs=cone_inputs(cone),
        geometry=geometry_section(cone),
        spectral=spectral_section(cone, i_max, j_max),
    )
