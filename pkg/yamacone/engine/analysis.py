"""Post-processing of trajectories: exponent fits, first-integral drift, periods."""

from dataclasses import dataclass

import numpy as np
from loguru import logger
from scipy.signal import find_peaks

from yamacone.dynamics.asymptotics import first_integral
from yamacone.dynamics.params import DynParams
from yamacone.engine.integrator import Trajectory
from yamacone.errors import DomainError, InsufficientSamplesError

MIN_SAMPLES = 20
MIN_PEAKS = 3
# Steps of ln‖w − w_eq‖ against the trend smaller than this fraction of its range
# count as rounding, not oscillation.
MONOTONE_RTOL = 1e-6


@dataclass(frozen=True)
class ExponentFit:
    rate: float
    r_squared: float
    n_samples: int
    method: str = "raw"


def _linear_fit(t: np.ndarray, v: np.ndarray) -> tuple[float, float]:
    slope, intercept = np.polyfit(t, v, 1)
    fitted = slope * t + intercept
    ss_res = float(np.sum((v - fitted) ** 2))
    ss_tot = float(np.sum((v - v.mean()) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    return float(slope), r2


def estimate_exponent(
    traj: Trajectory,
    window: tuple[float, float] | None = None,
    reference: tuple[float, float] = (0.0, 0.0),
) -> ExponentFit:
    """
    Least-squares rate of ln‖w(t) − w_eq‖ against system time.

    ``window`` bounds the integration time of the samples used; the rate is
    reported per unit of system time, so backward runs yield the forward rate.
    Oscillating norms (foci) are fitted through their local maxima instead.
    """
    tau = traj.t
    lo, hi = window if window is not None else (float(tau[0]), float(tau[-1]))
    dist = np.hypot(traj.x - reference[0], traj.y - reference[1])
    mask = (tau >= lo) & (tau <= hi) & (dist > 0)
    if int(mask.sum()) < MIN_SAMPLES:
        raise InsufficientSamplesError(
            f"{int(mask.sum())} samples in window ({lo}, {hi}); need {MIN_SAMPLES}"
        )
    t = traj.direction * tau[mask]
    log_d = np.log(dist[mask])
    steps = np.diff(log_d)
    band = MONOTONE_RTOL * float(np.ptp(log_d))
    if np.all(steps <= band) or np.all(steps >= -band):
        rate, r2 = _linear_fit(t, log_d)
        return ExponentFit(rate=rate, r_squared=r2, n_samples=int(mask.sum()))

    logger.warning("distance to the equilibrium is not monotone; fitting the peak envelope")
    peaks, _ = find_peaks(log_d)
    if len(peaks) < MIN_PEAKS:
        raise InsufficientSamplesError(f"{len(peaks)} envelope peaks; need {MIN_PEAKS}")
    rate, r2 = _linear_fit(t[peaks], log_d[peaks])
    return ExponentFit(rate=rate, r_squared=r2, n_samples=len(peaks), method="envelope")


def hamiltonian_drift(dp: DynParams, traj: Trajectory, i_scale: float = 1e-12) -> float:
    """max |I − I(x₀, y₀)| / max(|I(x₀, y₀)|, i_scale) over the samples."""
    if not dp.is_critical:
        raise DomainError(f"first integral needs alpha = alpha* = {dp.alpha_star}, got {dp.alpha}")
    x = np.clip(traj.x, 0.0, None)
    a = dp.alpha
    values = traj.y**2 / 2 - dp.a_bar * x**2 / 2 + dp.Q * x ** (a + 1) / (a + 1)
    i0 = first_integral(dp, float(traj.x[0]), float(traj.y[0]))
    return float(np.max(np.abs(values - i0)) / max(abs(i0), i_scale))


def detect_upcrossings(traj: Trajectory) -> np.ndarray:
    """System times where y crosses zero from below, linearly interpolated."""
    y = traj.y
    t = traj.physical_t
    idx = np.nonzero((y[:-1] < 0) & (y[1:] >= 0))[0]
    frac = -y[idx] / (y[idx + 1] - y[idx])
    return t[idx] + frac * (t[idx + 1] - t[idx])


def estimate_period(traj: Trajectory) -> float:
    crossings = detect_upcrossings(traj)
    if len(crossings) < 2:
        raise InsufficientSamplesError(f"{len(crossings)} upcrossings; need 2 for a period")
    return float(np.mean(np.diff(crossings)))
