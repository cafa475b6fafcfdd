"""Configuration schema using Pydantic."""

import math

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from yamacone.dynamics.params import EPS_ALPHA, critical_alpha
from yamacone.engine.integrator import IntegratorSettings


class EngineConfig(BaseModel):
    """ODE integration defaults."""

    tol: float = 1e-10
    t_max: float = 40.0
    equilibrium_radius: float = 1e-9
    escape_radius: float = 1e6
    max_steps: int = 500_000
    max_step: float = math.inf
    workers: int = 1  # Portrait seeds run on a thread pool when > 1

    def integrator_settings(self) -> IntegratorSettings:
        return IntegratorSettings(
            equilibrium_radius=self.equilibrium_radius,
            escape_radius=self.escape_radius,
            max_steps=self.max_steps,
            max_step=self.max_step,
        )


class SpectralConfig(BaseModel):
    """Mode window and series truncation."""

    i_max: int = 3
    j_max: int = 3
    truncation: int = 25


class OutputConfig(BaseModel):
    digits: int = 17  # Significant digits in CSV and table output


class Settings(BaseSettings):
    """Root settings for yamacone."""

    model_config = SettingsConfigDict(env_prefix="YAMACONE_", env_nested_delimiter="__")

    engine: EngineConfig = Field(default_factory=EngineConfig)
    spectral: SpectralConfig = Field(default_factory=SpectralConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)


CONE_KEYS = ("p", "q", "rp", "rq")
RAW_KEYS = ("a_bar", "b_bar", "n")


class ScenarioConfig(BaseModel):
    """
    One user scenario: a cone (p, q, rp, rq) or raw coefficients (a_bar, b_bar, n),
    together with alpha and Q.
    """

    model_config = ConfigDict(extra="forbid")

    name: str = "user"
    notes: str = ""

    # Cone form
    p: int | None = Field(default=None, ge=1)
    q: int | None = Field(default=None, ge=1)
    rp: float | None = Field(default=None, gt=0)
    rq: float | None = Field(default=None, gt=0)

    # Raw form
    a_bar: float | None = None
    b_bar: float | None = Field(default=None, le=0)
    n: int | None = Field(default=None, ge=3)

    alpha: float
    Q: float

    @field_validator("alpha")
    @classmethod
    def _alpha_in_range(cls, v: float, info: ValidationInfo) -> float:
        if not math.isfinite(v) or v <= 1:
            raise ValueError(f"alpha must exceed 1, got {v}")
        data = info.data
        n = data.get("n")
        if data.get("p") is not None and data.get("q") is not None:
            n = data["p"] + data["q"] + 1
        if n is not None and v - critical_alpha(n) > EPS_ALPHA:
            raise ValueError(
                f"alpha={v} exceeds the bound (n+2)/(n-2) = {critical_alpha(n)} for n={n}"
            )
        return v

    @model_validator(mode="after")
    def _one_form(self) -> "ScenarioConfig":
        cone = [k for k in CONE_KEYS if getattr(self, k) is not None]
        raw = [k for k in RAW_KEYS if getattr(self, k) is not None]
        if cone and raw:
            raise ValueError(f"ambiguous scenario: cone keys {cone} and raw keys {raw} both given")
        if not cone and not raw:
            raise ValueError("give either p, q, rp, rq or a_bar, b_bar, n")
        given, keys = (cone, CONE_KEYS) if cone else (raw, RAW_KEYS)
        missing = [k for k in keys if k not in given]
        if missing:
            raise ValueError(f"missing keys {missing}")
        return self

    @property
    def is_cone(self) -> bool:
        return self.p is not None
