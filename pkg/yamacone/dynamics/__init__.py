"""Reduced planar system of the radial Yamabe equation."""

from yamacone.dynamics.asymptotics import (
    MetricAsymptotic,
    PerturbationCheck,
    RadialSummary,
    first_integral,
    first_integral_at_w2,
    perturbation_conditions,
    radial_asymptotics,
    sigma_exponent,
    sigma_from_mu,
    u_from_w,
    yamabe_metric_asymptotic,
)
from yamacone.dynamics.cases import (
    CaseId,
    CaseLabel,
    FamilyDescriptor,
    FamilyKind,
    classify_case,
    solution_families,
)
from yamacone.dynamics.equilibria import (
    Equilibrium,
    EquilibriumKind,
    equilibria,
    find_equilibrium,
    jacobian,
    w2_location,
)
from yamacone.dynamics.params import (
    EPS_ALPHA,
    DynParams,
    a_bar_of_s,
    alpha_zero,
    alpha_zero_from_mu,
    b_bar_of_s,
    critical_alpha,
    dyn_params,
    eps_a_bar,
    s_zero,
    s_zero_residual,
    w2_discriminant_of_s,
)

__all__ = [
    "EPS_ALPHA",
    "CaseId",
    "CaseLabel",
    "DynParams",
    "Equilibrium",
    "EquilibriumKind",
    "FamilyDescriptor",
    "FamilyKind",
    "MetricAsymptotic",
    "PerturbationCheck",
    "RadialSummary",
    "a_bar_of_s",
    "alpha_zero",
    "alpha_zero_from_mu",
    "b_bar_of_s",
    "classify_case",
    "critical_alpha",
    "dyn_params",
    "eps_a_bar",
    "equilibria",
    "find_equilibrium",
    "first_integral",
    "first_integral_at_w2",
    "jacobian",
    "perturbation_conditions",
    "radial_asymptotics",
    "s_zero",
    "s_zero_residual",
    "sigma_exponent",
    "sigma_from_mu",
    "solution_families",
    "u_from_w",
    "w2_discriminant_of_s",
    "w2_location",
    "yamabe_metric_asymptotic",
]
