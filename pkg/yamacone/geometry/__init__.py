"""Cone geometry: curvature factor, μ², sphere spectra and the plus/minus dichotomy."""

from yamacone.geometry.cone import (
    CaseSign,
    ConeParams,
    GeometrySummary,
    LambdaExtrema,
    case_sign,
    conformal_coefficient,
    conformal_potential,
    lambda_extrema,
    lambda_factor,
    lambda_factor_appendix,
    lambda_of_p,
    mu_squared,
    mu_squared_direct,
    plus_case_lambda_threshold,
    scalar_curvature,
    sphere_eigenvalue,
    summarize,
    volume_density,
)

__all__ = [
    "CaseSign",
    "ConeParams",
    "GeometrySummary",
    "LambdaExtrema",
    "case_sign",
    "conformal_coefficient",
    "conformal_potential",
    "lambda_extrema",
    "lambda_factor",
    "lambda_factor_appendix",
    "lambda_of_p",
    "mu_squared",
    "mu_squared_direct",
    "plus_case_lambda_threshold",
    "scalar_curvature",
    "sphere_eigenvalue",
    "summarize",
    "volume_density",
]
