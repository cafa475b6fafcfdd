"""Named parameter sets: figure scenarios and user scenarios."""

from yamacone.scenarios.registry import (
    FIGURES,
    RawCoefficients,
    Scenario,
    ScenarioSource,
    figure_names,
    find_by_name,
)

__all__ = [
    "FIGURES",
    "RawCoefficients",
    "Scenario",
    "ScenarioSource",
    "figure_names",
    "find_by_name",
]
