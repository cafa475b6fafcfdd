"""Phase-portrait sampling over a grid of seeds."""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from loguru import logger

from yamacone.dynamics.params import DynParams
from yamacone.engine.integrator import IntegratorSettings, Trajectory, integrate
from yamacone.errors import DomainError, NumericalError


@dataclass(frozen=True)
class PortraitSpec:
    x_range: tuple[float, float]
    y_range: tuple[float, float]
    grid: tuple[int, int]
    t_max: float = 10.0
    tol: float = 1e-8

    def __post_init__(self) -> None:
        nx, ny = self.grid
        if nx < 0 or ny < 0:
            raise DomainError(f"grid sizes must be nonnegative, got {self.grid}")
        if not self.x_range[0] < self.x_range[1] or not self.y_range[0] < self.y_range[1]:
            raise DomainError(f"ranges must be nonempty, got {self.x_range}, {self.y_range}")
        if self.x_range[0] < 0:
            raise DomainError(f"x_range must lie in [0, inf), got {self.x_range}")

    def seeds(self) -> list[tuple[float, float]]:
        nx, ny = self.grid
        xs = np.linspace(self.x_range[0], self.x_range[1], nx)
        ys = np.linspace(self.y_range[0], self.y_range[1], ny)
        return [(float(x), float(y)) for x in xs for y in ys]


@dataclass
class PortraitSeed:
    seed_id: int
    init: tuple[float, float]
    trajectory: Trajectory | None = None
    error: str | None = None


@dataclass
class PortraitRun:
    dp: DynParams
    spec: PortraitSpec
    seeds: list[PortraitSeed] = field(default_factory=list)

    @property
    def trajectories(self) -> list[Trajectory]:
        return [s.trajectory for s in self.seeds if s.trajectory is not None]

    @property
    def failures(self) -> dict[int, str]:
        return {s.seed_id: s.error for s in self.seeds if s.error is not None}


def sample_portrait(
    dp: DynParams,
    spec: PortraitSpec,
    *,
    settings: IntegratorSettings | None = None,
    workers: int = 1,
) -> PortraitRun:
    """
    One trajectory per grid seed, in seed order.

    Seeds run independently; ``workers > 1`` runs them on a thread pool, which
    leaves the ordering and the samples unchanged.
    """

    def run_one(item: tuple[int, tuple[float, float]]) -> PortraitSeed:
        seed_id, init = item
        try:
            traj = integrate(dp, init, spec.t_max, spec.tol, settings=settings)
            return PortraitSeed(seed_id, init, trajectory=traj)
        except NumericalError as e:
            logger.warning(f"portrait seed {seed_id} at {init} failed: {e}")
            return PortraitSeed(seed_id, init, error=str(e))

    items = list(enumerate(spec.seeds()))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            seeds = list(pool.map(run_one, items))
    else:
        seeds = [run_one(item) for item in items]
    return PortraitRun(dp=dp, spec=spec, seeds=seeds)
