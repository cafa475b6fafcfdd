"""Separatrix shooting along eigendirections of an equilibrium."""

import numpy as np

from yamacone.dynamics.equilibria import Equilibrium
from yamacone.dynamics.params import DynParams
from yamacone.engine.integrator import IntegratorSettings, Trajectory, integrate
from yamacone.errors import DomainError

OFFSET_RANGE = (1e-8, 1e-2)
MINUS, PLUS = 0, 1


def shoot_separatrix(
    dp: DynParams,
    eq: Equilibrium,
    direction: int,
    offset: float,
    backward: bool,
    *,
    t_max: float = 40.0,
    tol: float = 1e-10,
    sign: int = 1,
    settings: IntegratorSettings | None = None,
    max_step: float | None = None,
) -> Trajectory:
    """
    Integrate from eq + sign·offset·v, v the unit eigenvector ``direction``.

    Args:
        dp: System parameters.
        eq: Equilibrium with a real eigen-pair.
        direction: ``MINUS`` (0) or ``PLUS`` (1) eigenvalue.
        offset: Distance from the equilibrium, in [1e-8, 1e-2].
        backward: Integrate the time-reversed field (unstable directions).
        t_max: Integration time span.
        tol: Local error target.
        sign: Which side of the equilibrium along v; points with x < 0 are rejected.
        settings: Integrator settings.
        max_step: Optional step cap (controls sample density).
    """
    if not eq.has_real_pair:
        raise DomainError(f"{eq.name} has complex eigenvalues {eq.eigvals}; no real direction")
    if not OFFSET_RANGE[0] <= offset <= OFFSET_RANGE[1]:
        raise DomainError(f"offset must lie in {OFFSET_RANGE}, got {offset}")
    if direction not in (MINUS, PLUS) or sign not in (1, -1):
        raise DomainError(f"bad direction/sign ({direction}, {sign})")
    start = np.asarray(eq.location) + sign * offset * eq.direction(direction)
    traj = integrate(
        dp,
        (float(start[0]), float(start[1])),
        t_max,
        tol,
        direction=-1 if backward else 1,
        settings=settings,
        max_step=max_step,
    )
    traj.meta.update(
        equilibrium=eq.name,
        eigenvalue=eq.eigvals[direction].real,
        offset=offset,
        sign=sign,
    )
    return traj
