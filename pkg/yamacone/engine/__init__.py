"""Numerical verification layer for the reduced planar system."""

from yamacone.engine.analysis import (
    ExponentFit,
    detect_upcrossings,
    estimate_exponent,
    estimate_period,
    hamiltonian_drift,
)
from yamacone.engine.integrator import (
    IntegratorSettings,
    Termination,
    Trajectory,
    integrate,
    vector_field,
)
from yamacone.engine.portrait import PortraitRun, PortraitSeed, PortraitSpec, sample_portrait
from yamacone.engine.shooting import MINUS, PLUS, shoot_separatrix

__all__ = [
    "MINUS",
    "PLUS",
    "ExponentFit",
    "IntegratorSettings",
    "PortraitRun",
    "PortraitSeed",
    "PortraitSpec",
    "Termination",
    "Trajectory",
    "detect_upcrossings",
    "estimate_exponent",
    "estimate_period",
    "hamiltonian_drift",
    "integrate",
    "sample_portrait",
    "shoot_separatrix",
    "vector_field",
]
