"""Linear mode analysis: coupling constants, indicial exponents, series and Sobolev verdicts."""

from yamacone.spectral.modes import (
    PositivityVerdict,
    SpectralMode,
    coupling_constant,
    coupling_constant_rewritten,
    indicial_exponents,
    neg_conditions,
    negative_modes,
    odd_indicial_exponents,
    positivity_report,
    scan_window,
    spectral_mode,
    spectral_table,
)
from yamacone.spectral.series import (
    DEFAULT_TRUNCATION,
    SeriesSolution,
    eval_series,
    mode_series,
    residual_slope,
    series_coefficients,
    series_log_residual,
    series_residual,
    series_residual_for_mode,
    working_precision,
)
from yamacone.spectral.sobolev import (
    ModeMembership,
    SobolevVerdict,
    alpha_basic_exponent,
    alpha_basic_verdict,
    h2_threshold_holds,
    mode_membership_report,
    not_in_L2,
    sobolev_verdict,
)

__all__ = [
    "DEFAULT_TRUNCATION",
    "ModeMembership",
    "PositivityVerdict",
    "SeriesSolution",
    "SobolevVerdict",
    "SpectralMode",
    "alpha_basic_exponent",
    "alpha_basic_verdict",
    "coupling_constant",
    "coupling_constant_rewritten",
    "eval_series",
    "h2_threshold_holds",
    "indicial_exponents",
    "mode_membership_report",
    "mode_series",
    "neg_conditions",
    "negative_modes",
    "not_in_L2",
    "odd_indicial_exponents",
    "positivity_report",
    "residual_slope",
    "scan_window",
    "series_coefficients",
    "series_log_residual",
    "series_residual",
    "series_residual_for_mode",
    "working_precision",
    "sobolev_verdict",
    "spectral_mode",
    "spectral_table",
]
