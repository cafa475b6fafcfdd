"""Numerical verification suites.

Each suite returns a list of ``CheckResult``; a check passes when its largest
residual stays within its tolerance. Random draws come from
``np.random.default_rng(seed)`` so every run is reproducible.
"""

import math
import time
from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

import numpy as np
from loguru import logger

from yamacone.dynamics.asymptotics import first_integral_at_w2, sigma_exponent
from yamacone.dynamics.cases import classify_case
from yamacone.dynamics.equilibria import find_equilibrium
from yamacone.dynamics.params import (
    DynParams,
    alpha_zero,
    critical_alpha,
    s_zero_residual,
)
from yamacone.engine.analysis import (
    detect_upcrossings,
    estimate_exponent,
    estimate_period,
    hamiltonian_drift,
)
from yamacone.engine.integrator import integrate
from yamacone.engine.shooting import MINUS, PLUS, shoot_separatrix
from yamacone.errors import DomainError
from yamacone.geometry.cone import (
    CaseSign,
    ConeParams,
    case_sign,
    lambda_factor,
    lambda_factor_appendix,
    mu_squared,
    mu_squared_direct,
)
from yamacone.scenarios.registry import FIGURES
from yamacone.spectral.modes import (
    coupling_constant,
    coupling_constant_rewritten,
    indicial_exponents,
    negative_modes,
    scan_window,
)
from yamacone.spectral.series import mode_series, residual_slope, series_residual_for_mode
from yamacone.spectral.sobolev import alpha_basic_verdict, mode_membership_report
from yamacone.utils.helpers import rel_residual

IDENTITY_TOL = 1e-10
SERIES_SLOPE_TOL = 0.15
SERIES_ELLS = (1e-1, 3e-2, 1e-2, 3e-3, 1e-3)
EXPONENT_REL_TOL = 0.01
FOWLER_DRIFT_TOL = 1e-8
FOWLER_MIN_PERIODS = 10
SIGMA_TOL = 1e-12


@dataclass
class CheckResult:
    name: str
    passed: bool
    statement: str
    max_residual: float
    tolerance: float
    diagnostics: dict[str, Any] = field(default_factory=dict)


def _check(
    name: str, statement: str, residual: float, tolerance: float, **diagnostics: Any
) -> CheckResult:
    passed = bool(residual <= tolerance)
    if not passed:
        logger.warning(f"check {name} failed: residual {residual:.3e} > {tolerance:.3e}")
    return CheckResult(name, passed, statement, float(residual), tolerance, dict(diagnostics))


def _random_cone(
    rng: np.random.Generator, r_range: tuple[float, float] = (0.3, 3.0), d_max: int = 9
) -> ConeParams:
    """p, q uniform in [1, d_max] with n = p + q + 1 >= 5, radii uniform in r_range."""
    while True:
        p, q = (int(v) for v in rng.integers(1, d_max + 1, size=2))
        if p + q + 1 >= 5:
            break
    r_p, r_q = (float(v) for v in rng.uniform(*r_range, size=2))
    return ConeParams(p=p, q=q, r_p=r_p, r_q=r_q)


def _scaled(a: float, b: float, *terms: float) -> float:
    """|a − b| relative to the largest term entering either side."""
    return abs(a - b) / max(1.0, abs(a), abs(b), *(abs(t) for t in terms))


# ---------------------------------------------------------------------------
# Closed-form identities
# ---------------------------------------------------------------------------


def identities(draws: int = 10_000, seed: int = 0) -> list[CheckResult]:
    """Closed-form identities over random cones and exponents α ∈ (1, α*]."""
    rng = np.random.default_rng(seed)
    worst = dict.fromkeys(
        ("lambda", "mu_sq", "coupling", "w1_discriminant", "vieta", "s_zero", "alpha_zero"), 0.0
    )
    for _ in range(draws):
        cone = _random_cone(rng)
        n = cone.n
        alpha = 1 + (critical_alpha(n) - 1) * (1 - rng.uniform())
        i, j = (int(v) for v in rng.integers(0, 6, size=2))
        lam = lambda_factor(cone)
        mu_sq = mu_squared(cone)

        worst["lambda"] = max(worst["lambda"], rel_residual(lam, lambda_factor_appendix(cone)))
        worst["mu_sq"] = max(worst["mu_sq"], rel_residual(mu_sq, mu_squared_direct(cone)))
        K = coupling_constant(cone, i, j)
        worst["coupling"] = max(
            worst["coupling"], rel_residual(K, coupling_constant_rewritten(cone, i, j))
        )

        dp = DynParams.from_lambda(n, lam, alpha, 1.0)
        worst["w1_discriminant"] = max(
            worst["w1_discriminant"],
            _scaled(dp.w1_discriminant, (n - 2) ** 2 * mu_sq / 4, dp.b_bar**2 / 4, dp.a_bar),
        )

        nu_minus, nu_plus = indicial_exponents(cone, i, j)
        worst["vieta"] = max(
            worst["vieta"],
            _scaled(nu_plus + nu_minus, -(n - 2), nu_minus),
            _scaled(nu_plus * nu_minus, -K, nu_minus * nu_minus),
        )

        worst["s_zero"] = max(worst["s_zero"], s_zero_residual(cone))
        a0 = alpha_zero(cone)
        d = a0 - 1
        dp0 = DynParams.from_lambda(n, lam, a0, 1.0)
        worst["alpha_zero"] = max(
            worst["alpha_zero"],
            abs(dp0.a_bar) / max(1.0, 4 / d**2, 2 * (n - 2) / d, abs(lam)),
        )

    statements = {
        "lambda": "Lambda direct form equals the sphere-term rewriting",
        "mu_sq": "mu^2 = 1 + Lambda/((n-1)(n-2)) equals 2(sphere terms)/((n-1)(n-2))",
        "coupling": "K_ij direct form equals the mu^2 rewriting",
        "w1_discriminant": "b_bar^2/4 + a_bar = (n-2)^2 mu^2 / 4",
        "vieta": "nu+ + nu- = -(n-2) and nu+ nu- = -K_ij",
        "s_zero": "s0 = 1/(1+mu) solves (Lambda/((n-1)(n-2))) s^2 + 2s - 1 = 0",
        "alpha_zero": "a_bar vanishes at alpha0 = 1 + 4/((n-2)(1+mu))",
    }
    return [
        _check(f"identity.{key}", statements[key], worst[key], IDENTITY_TOL, draws=draws)
        for key in worst
    ]


# ---------------------------------------------------------------------------
# Series
# ---------------------------------------------------------------------------


def series(instances: int = 20, seed: int = 0, truncation: int = 25) -> list[CheckResult]:
    """Log-log slope of the truncated-series residual against ν + 2M."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    slopes = []
    for _ in range(instances):
        cone = _random_cone(rng)
        i, j = (int(v) for v in rng.integers(0, 4, size=2))
        Q1 = float(rng.uniform(0.1, 5.0))
        sol = mode_series(cone, i, j, Q1, M=truncation)
        logs = series_residual_for_mode(cone, i, j, sol, SERIES_ELLS)
        slope = residual_slope(SERIES_ELLS, logs)
        expected = sol.nu + 2 * truncation
        slopes.append((slope, expected))
        worst = max(worst, abs(slope - expected))
    return [
        _check(
            "series.residual_slope",
            "radial operator on the truncated series leaves O(l^(nu+2M))",
            worst,
            SERIES_SLOPE_TOL,
            instances=instances,
            slopes=slopes,
        )
    ]


# ---------------------------------------------------------------------------
# Figure scenarios
# ---------------------------------------------------------------------------


def figures() -> list[CheckResult]:
    results = []
    mismatches = []
    for scenario in FIGURES:
        label = classify_case(scenario.dyn_params())
        if label.id.value != scenario.caption_case:
            mismatches.append((scenario.name, label.id.value, scenario.caption_case))
    results.append(
        _check(
            "figures.classification",
            "every figure scenario classifies to its captioned case",
            float(len(mismatches)),
            0.0,
            mismatches=mismatches,
        )
    )
    worst = 0.0
    for name in ("fig7_1", "fig7_2"):
        dp = next(s for s in FIGURES if s.name == name).dyn_params()
        worst = max(worst, rel_residual(dp.a_bar, -50.0), rel_residual(dp.b_bar, -15.0))
    results.append(
        _check(
            "figures.derived_coefficients",
            "n=7, Lambda=0, alpha=1.2 gives (a_bar, b_bar) = (-50, -15)",
            worst,
            1e-12,
        )
    )
    return results


# ---------------------------------------------------------------------------
# Dynamics against closed forms
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ShootingCase:
    """A parameter set, the eigen-direction shot along and the fit window."""

    case: str
    dp: DynParams
    direction: int
    backward: bool
    window: tuple[float, float]
    max_step: float


def representative_cases() -> tuple[ShootingCase, ...]:
    """
    One parameter set per case 1-4.

    Cases 1 and 2 use n=7, Λ=−28.8 (μ=0.2), α=1.5: ā=−2, b̄=−3, λ± = −1, −2.
    Cases 3 and 4 use n=7, Λ=0, α=1.6: λ− = −10/3, λ+ = 5/3.
    """
    c12 = (7, -28.8, 1.5)
    c34 = (7, 0.0, 1.6)
    return (
        ShootingCase("C1", DynParams.from_lambda(*c12, -1.0), MINUS, True, (0.0, 4.5), 0.1),
        ShootingCase("C2", DynParams.from_lambda(*c12, 1.0), MINUS, True, (0.0, 4.5), 0.1),
        ShootingCase("C3", DynParams.from_lambda(*c34, 5.0), MINUS, True, (0.0, 2.7), 0.05),
        ShootingCase("C4", DynParams.from_lambda(*c34, -5.0), PLUS, False, (0.0, 5.5), 0.1),
    )


def dynamics(tol: float = 1e-10) -> list[CheckResult]:
    """Separatrix shooting recovers the analytic eigenvalue at w1."""
    results = []
    for item in representative_cases():
        start = time.perf_counter()
        label = classify_case(item.dp)
        w1 = find_equilibrium(item.dp, "w1")
        expected = w1.eigvals[item.direction].real
        traj = shoot_separatrix(
            item.dp,
            w1,
            item.direction,
            1e-8,
            item.backward,
            t_max=item.window[1] + 1.0,
            tol=tol,
            max_step=item.max_step,
        )
        fit = estimate_exponent(traj, window=item.window)
        elapsed = time.perf_counter() - start
        results.append(
            _check(
                f"dynamics.{item.case}",
                f"shooting in case {label.id.value} recovers eigenvalue {expected:.6g}",
                abs(fit.rate - expected) / abs(expected),
                EXPONENT_REL_TOL,
                rate=fit.rate,
                expected=expected,
                r_squared=fit.r_squared,
                samples=fit.n_samples,
                seconds=elapsed,
            )
        )
    return results


# ---------------------------------------------------------------------------
# Fowler orbits at the critical exponent
# ---------------------------------------------------------------------------


def fowler_orbit(n: int, tol: float = 1e-10, Q: float = 1.0, periods: float = 25.0):
    """Critical system for the flat cone of dimension n and one orbit seeded at (x₂/2, 0)."""
    dp = DynParams.from_lambda(n, 0.0, critical_alpha(n), Q)
    x2 = find_equilibrium(dp, "w2").location[0]
    linear_period = 2 * math.pi / math.sqrt(dp.a_bar * (dp.alpha - 1))
    traj = integrate(
        dp,
        (x2 / 2, 0.0),
        periods * linear_period,
        tol,
        max_step=linear_period / 64,
    )
    return dp, traj


def fowler(tol: float = 1e-10, dims: tuple[int, ...] = (5, 6, 7)) -> list[CheckResult]:
    results = []
    for n in dims:
        dp, traj = fowler_orbit(n, tol)
        crossings = detect_upcrossings(traj)
        drift = hamiltonian_drift(dp, traj)
        x = np.clip(traj.x, 0.0, None)
        a = dp.alpha
        values = traj.y**2 / 2 - dp.a_bar * x**2 / 2 + dp.Q * x ** (a + 1) / (a + 1)
        floor = first_integral_at_w2(dp)
        inside = bool(values.max() < 0.0 and values.min() > floor)
        enough = len(crossings) >= FOWLER_MIN_PERIODS + 1
        residual = drift if inside and enough else math.inf
        results.append(
            _check(
                f"fowler.n{n}",
                "first integral conserved on a periodic orbit around w2, inside (I(w2), 0)",
                residual,
                FOWLER_DRIFT_TOL,
                drift=drift,
                periods=len(crossings) - 1,
                period=estimate_period(traj),
                inside=inside,
            )
        )
    return results


# ---------------------------------------------------------------------------
# Sobolev classifier
# ---------------------------------------------------------------------------


def sobolev(samples: int = 1000, seed: int = 0) -> list[CheckResult]:
    results = []

    flips = []
    for n in range(5, 13):
        t = (n + 4) / n
        below = alpha_basic_verdict(t * (1 - 1e-9), n).in_L2
        at = alpha_basic_verdict(t, n).in_L2
        above = alpha_basic_verdict(t * (1 + 1e-9), n).in_L2
        if below or at or not above:
            flips.append(n)
    results.append(
        _check(
            "sobolev.alpha_basic_threshold",
            "alpha-basic functions enter L2 exactly above alpha = (n+4)/n",
            float(len(flips)),
            0.0,
            failures=flips,
        )
    )

    # p = q = 3: plus-case iff 12/r^2 > 12/5, i.e. r^2 < 5.
    disagreements = []
    for r in np.linspace(1.0, 3.0, 41):
        cone = ConeParams(p=3, q=3, r_p=float(r), r_q=float(r))
        in_h2 = mode_membership_report(cone, 0, 0).plus_branch.in_H2
        if in_h2 != (case_sign(cone) is CaseSign.PLUS):
            disagreements.append(float(r))
    results.append(
        _check(
            "sobolev.h2_matches_case_sign",
            "mode (0,0) plus branch is in H2 exactly in the plus-case",
            float(len(disagreements)),
            0.0,
            disagreements=disagreements,
        )
    )

    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        cone = _random_cone(rng)
        _, nu_plus = indicial_exponents(cone, 0, 0)
        worst = max(worst, abs(sigma_exponent(cone) - nu_plus) / max(1.0, abs(nu_plus)))
    results.append(
        _check(
            "sobolev.sigma_is_nu00",
            "sigma = (n-2)(mu-1)/2 equals nu_00^{e+}",
            worst,
            SIGMA_TOL,
            samples=samples,
        )
    )
    return results


# ---------------------------------------------------------------------------
# Negative modes
# ---------------------------------------------------------------------------


def modes(samples: int = 200, seed: int = 0, window: int = 4) -> list[CheckResult]:
    results = []
    cone = ConeParams(p=3, q=3, r_p=1.0, r_q=1.0)
    found = [(i, j) for i, j, _ in negative_modes(cone, window, window)]
    results.append(
        _check(
            "modes.unit_s3xs3",
            "p=q=3, r=1 has exactly the negative mode (0,0)",
            0.0 if found == [(0, 0)] else 1.0,
            0.0,
            found=found,
        )
    )

    rng = np.random.default_rng(seed)
    positive_hits = 0
    scan_mismatch = 0
    positive_cones = 0
    for _ in range(samples):
        cone = _random_cone(rng)
        listed = negative_modes(cone, window, window)
        if lambda_factor(cone) > 0:
            positive_cones += 1
            positive_hits += len(listed)
        scanned = scan_window(cone, window, window)
        if [(i, j) for i, j, _ in listed] != [(i, j) for i, j, _ in scanned]:
            scan_mismatch += 1
    results.append(
        _check(
            "modes.positive_lambda_empty",
            "cones with Lambda > 0 have no mode with K_ij <= 0",
            float(positive_hits),
            0.0,
            positive_cones=positive_cones,
        )
    )
    results.append(
        _check(
            "modes.scan_agrees",
            "early-terminating enumeration agrees with the brute-force window scan",
            float(scan_mismatch),
            0.0,
            samples=samples,
        )
    )
    return results


SUITES: dict[str, Callable[..., list[CheckResult]]] = {
    "identities": identities,
    "series": series,
    "figures": figures,
    "dynamics": dynamics,
    "fowler": fowler,
    "sobolev": sobolev,
    "modes": modes,
}


def run_suite(
    name: str, *, draws: int | None = None, tol: float | None = None
) -> list[CheckResult]:
    """Run one named suite, or every suite for ``"all"``."""
    if name == "all":
        results: list[CheckResult] = []
        for key in SUITES:
            results.extend(run_suite(key, draws=draws, tol=tol))
        return results
    suite = SUITES.get(name)
    if suite is None:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    kwargs: dict[str, Any] = {}
    if draws is not None and name == "identities":
        kwargs["draws"] = draws
    if tol is not None and name in ("dynamics", "fowler"):
        kwargs["tol"] = tol
    logger.info(f"running suite {name}")
    return suite(**kwargs)
