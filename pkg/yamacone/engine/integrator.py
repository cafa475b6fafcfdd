"""Adaptive integration of x' = y, y' = āx + b̄y − Q·x^α.

Steps use the Dormand–Prince 8(5,3) tableau published on ``scipy.integrate.DOP853``.
The stepping loop lives here so rejected steps are counted and the step-size floor
is enforced.
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from loguru import logger
from scipy.integrate import DOP853

from yamacone.dynamics.equilibria import equilibria
from yamacone.dynamics.params import DynParams
from yamacone.errors import DomainError, MaxStepsExceededError, StepSizeUnderflowError

_A = DOP853.A
_B = DOP853.B
_E3 = DOP853.E3
_E5 = DOP853.E5
_N_STAGES = DOP853.n_stages
_ERROR_ORDER = DOP853.error_estimator_order

SAFETY = 0.9
MIN_FACTOR = 0.2
MAX_FACTOR = 10.0
# PI controller gains
_BETA = 0.04
_EXPO = 1 / (_ERROR_ORDER + 1) - 0.75 * _BETA

TOL_RANGE = (1e-13, 1e-3)


class Termination(str, Enum):
    TIME_LIMIT = "TimeLimit"
    REACHED_EQUILIBRIUM = "ReachedEquilibrium"
    ESCAPED = "Escaped"
    LEFT_HALF_PLANE = "LeftHalfPlane"


@dataclass
class IntegratorSettings:
    equilibrium_radius: float = 1e-9
    escape_radius: float = 1e6
    max_steps: int = 500_000
    max_step: float = math.inf
    min_step_factor: float = 1e-14


@dataclass(eq=False)
class Trajectory:
    """Accepted samples of one integration.

    ``t`` is integration time (always increasing); for ``direction == -1`` the
    system time is ``-t`` (see ``physical_t``).
    """

    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    tol_used: float
    steps_accepted: int
    steps_rejected: int
    terminated: Termination
    direction: int = 1
    meta: dict = field(default_factory=dict)

    @property
    def physical_t(self) -> np.ndarray:
        return self.direction * self.t

    @property
    def samples(self) -> list[tuple[float, float, float]]:
        return list(zip(self.t.tolist(), self.x.tolist(), self.y.tolist()))

    @property
    def final_state(self) -> tuple[float, float]:
        return float(self.x[-1]), float(self.y[-1])

    def __len__(self) -> int:
        return len(self.t)


def vector_field(dp: DynParams, x: float, y: float) -> tuple[float, float]:
    """(y, āx + b̄y − Q·x^α) on the closed right half-plane."""
    if x < 0:
        raise DomainError(f"vector field is defined for x >= 0, got x={x}")
    return y, dp.a_bar * x + dp.b_bar * y - dp.Q * x**dp.alpha


def _make_rhs(dp: DynParams, direction: int):
    a_bar, b_bar, Q, alpha = dp.a_bar, dp.b_bar, dp.Q, dp.alpha

    def rhs(state: np.ndarray) -> np.ndarray:
        x, y = state
        # Stage points may dip below the axis; they see the limit value at x = 0.
        xp = x if x > 0 else 0.0
        return direction * np.array([y, a_bar * xp + b_bar * y - Q * xp**alpha])

    return rhs


def _rms(v: np.ndarray) -> float:
    return float(np.linalg.norm(v) / math.sqrt(v.size))


def _initial_step(rhs, y0: np.ndarray, f0: np.ndarray, tol: float) -> float:
    scale = tol * (1 + np.abs(y0))
    d0, d1 = _rms(y0 / scale), _rms(f0 / scale)
    h0 = 1e-6 if d0 < 1e-5 or d1 < 1e-5 else 0.01 * d0 / d1
    f1 = rhs(y0 + h0 * f0)
    d2 = _rms((f1 - f0) / scale) / h0
    if max(d1, d2) <= 1e-15:
        h1 = max(1e-6, h0 * 1e-3)
    else:
        h1 = (0.01 / max(d1, d2)) ** (1 / (DOP853.order + 1))
    return min(100 * h0, h1)


def _step(rhs, y: np.ndarray, f: np.ndarray, h: float, K: np.ndarray):
    K[0] = f
    for s in range(1, _N_STAGES):
        dy = np.dot(K[:s].T, _A[s, :s]) * h
        K[s] = rhs(y + dy)
    y_new = y + h * np.dot(K[:-1].T, _B)
    f_new = rhs(y_new)
    K[-1] = f_new
    return y_new, f_new


def _error_norm(K: np.ndarray, h: float, scale: np.ndarray) -> float:
    err5 = np.dot(K.T, _E5) / scale
    err3 = np.dot(K.T, _E3) / scale
    e5 = float(np.dot(err5, err5))
    e3 = float(np.dot(err3, err3))
    if e5 == 0.0 and e3 == 0.0:
        return 0.0
    return abs(h) * e5 / math.sqrt((e5 + 0.01 * e3) * scale.size)


def integrate(
    dp: DynParams,
    init: tuple[float, float],
    t_max: float,
    tol: float,
    *,
    direction: int = 1,
    settings: IntegratorSettings | None = None,
    max_step: float | None = None,
    targets: Sequence[tuple[float, float]] | None = None,
) -> Trajectory:
    """
    Integrate from ``init`` for integration time ``t_max``.

    Args:
        dp: System parameters.
        init: Initial state (x, y) with x >= 0.
        t_max: Integration time span.
        tol: Local error target; each accepted step satisfies
            |err_i| <= tol·(1 + |state_i|) componentwise.
        direction: +1 forward, -1 for the time-reversed field.
        settings: Radii, step budget and step bounds.
        max_step: Overrides ``settings.max_step``.
        targets: Equilibria that stop the run; defaults to all equilibria of dp.

    Returns:
        The accepted samples and step statistics.
    """
    settings = settings or IntegratorSettings()
    if init[0] < 0:
        raise DomainError(f"initial state must have x >= 0, got {init}")
    if not TOL_RANGE[0] <= tol <= TOL_RANGE[1]:
        raise DomainError(f"tol must lie in [{TOL_RANGE[0]}, {TOL_RANGE[1]}], got {tol}")
    if not t_max > 0:
        raise DomainError(f"t_max must be positive, got {t_max}")
    if direction not in (1, -1):
        raise DomainError(f"direction must be +1 or -1, got {direction}")
    h_cap = settings.max_step if max_step is None else max_step
    if targets is None:
        targets = [eq.location for eq in equilibria(dp)]
    target_arr = np.asarray(targets, dtype=float).reshape(-1, 2)

    def near_target(state: np.ndarray) -> bool:
        if target_arr.size == 0:
            return False
        dist = np.hypot(target_arr[:, 0] - state[0], target_arr[:, 1] - state[1])
        return bool(dist.min() < settings.equilibrium_radius)

    rhs = _make_rhs(dp, direction)
    y = np.array(init, dtype=float)
    ts, xs, ys = [0.0], [y[0]], [y[1]]

    def finish(term: Termination) -> Trajectory:
        logger.debug(
            f"integration stopped: {term.value} at t={ts[-1]:.6g} "
            f"({accepted} accepted, {rejected} rejected)"
        )
        return Trajectory(
            t=np.array(ts),
            x=np.array(xs),
            y=np.array(ys),
            tol_used=tol,
            steps_accepted=accepted,
            steps_rejected=rejected,
            terminated=term,
            direction=direction,
        )

    accepted = rejected = 0
    if near_target(y):
        return finish(Termination.REACHED_EQUILIBRIUM)

    f = rhs(y)
    h = min(_initial_step(rhs, y, f, tol), h_cap, t_max)
    h_min = settings.min_step_factor * t_max
    K = np.empty((_N_STAGES + 1, 2))
    t = 0.0
    err_prev = 1.0
    last_rejected = False

    while t < t_max:
        if accepted + rejected >= settings.max_steps:
            raise MaxStepsExceededError(
                f"step budget {settings.max_steps} exhausted at t={t:.6g} of {t_max}"
            )
        remaining = t_max - t
        h = min(h, h_cap, remaining)
        if h < h_min and h < remaining:
            raise StepSizeUnderflowError(
                f"step {h:.3e} below {h_min:.3e} at t={t:.6g}, state={y.tolist()}"
            )
        y_new, f_new = _step(rhs, y, f, h, K)
        scale = tol * (1 + np.maximum(np.abs(y), np.abs(y_new)))
        err = _error_norm(K, h, scale) if np.all(np.isfinite(y_new)) else math.inf

        if err <= 1.0:
            if err == 0.0:
                factor = MAX_FACTOR
            else:
                factor = SAFETY * err**-_EXPO * err_prev**_BETA
                factor = min(MAX_FACTOR, max(MIN_FACTOR, factor))
            if last_rejected:
                factor = min(1.0, factor)
            t = t_max if h == remaining else t + h
            y, f = y_new, f_new
            accepted += 1
            ts.append(t)
            xs.append(y[0])
            ys.append(y[1])
            err_prev = max(err, 1e-4)
            last_rejected = False
            h *= factor

            if y[0] < 0:
                return finish(Termination.LEFT_HALF_PLANE)
            if math.hypot(y[0], y[1]) > settings.escape_radius:
                return finish(Termination.ESCAPED)
            if near_target(y):
                return finish(Termination.REACHED_EQUILIBRIUM)
        else:
            rejected += 1
            last_rejected = True
            factor = MIN_FACTOR if not math.isfinite(err) else SAFETY * err**-_EXPO
            h *= max(MIN_FACTOR, factor)

    return finish(Termination.TIME_LIMIT)
