"""Configuration loading utilities."""

import json
from pathlib import Path
from typing import Any

from loguru import logger
from pydantic import ValidationError

from yamacone.config.schema import ScenarioConfig, Settings
from yamacone.errors import ConfigError, DomainError
from yamacone.geometry.cone import ConeParams
from yamacone.scenarios.registry import RawCoefficients, Scenario, ScenarioSource


def get_settings_path() -> Path:
    """Get the default settings file path."""
    from yamacone.utils.helpers import get_data_path

    return get_data_path() / "settings.json"


def load_settings(settings_path: Path | None = None) -> Settings:
    """
    Load settings from file, falling back to defaults.

    Environment variables (``YAMACONE_ENGINE__TOL`` etc.) apply on top of
    the defaults; values read from the file win over both.
    """
    path = settings_path or get_settings_path()

    if path.exists():
        try:
            with open(path, encoding="utf-8") as f:
                data = json.load(f)
            return Settings(**convert_keys(data))
        except (json.JSONDecodeError, ValueError) as e:
            logger.warning(f"Failed to load settings from {path}: {e}; using defaults")

    return Settings()


def parse_key_values(text: str) -> dict[str, str]:
    """Parse flat ``key=value`` lines; ``#`` starts a comment."""
    data: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigError(f"expected key=value, got {raw.strip()!r}", line=lineno)
        if not value:
            raise ConfigError(f"empty value for {key!r}", line=lineno)
        if key in data:
            raise ConfigError(f"duplicate key {key!r}", line=lineno)
        data[key] = value
    return data


def scenario_from_mapping(data: dict[str, Any]) -> Scenario:
    """Validate a flat mapping into a user scenario."""
    try:
        cfg = ScenarioConfig.model_validate(data)
    except ValidationError as e:
        err = e.errors()[0]
        field = ".".join(str(part) for part in err["loc"]) or "scenario"
        raise ConfigError(err["msg"], field=field) from e

    try:
        if cfg.is_cone:
            scenario = Scenario(
                name=cfg.name,
                source=ScenarioSource.USER_CONFIG,
                alpha=cfg.alpha,
                Q=cfg.Q,
                cone=ConeParams(p=cfg.p, q=cfg.q, r_p=cfg.rp, r_q=cfg.rq),
                notes=cfg.notes,
            )
        else:
            scenario = Scenario(
                name=cfg.name,
                source=ScenarioSource.USER_CONFIG,
                alpha=cfg.alpha,
                Q=cfg.Q,
                raw=RawCoefficients(a_bar=cfg.a_bar, b_bar=cfg.b_bar, n=cfg.n),
                notes=cfg.notes,
            )
        # Enforces the DynParams invariants at load time.
        scenario.dyn_params()
    except DomainError as e:
        raise ConfigError(str(e), field="rp/rq" if cfg.is_cone else "a_bar/b_bar") from e
    return scenario


def load_config(path: Path) -> Scenario:
    """
    Load a user scenario.

    Args:
        path: A ``key=value`` scenario file, or a JSON report whose ``inputs``
            echo is read back.

    Returns:
        The validated scenario.
    """
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read {path}: {e}") from e

    if text.lstrip().startswith("{"):
        try:
            report = json.loads(text)
        except json.JSONDecodeError as e:
            raise ConfigError(f"invalid JSON: {e.msg}", line=e.lineno) from e
        inputs = report.get("inputs") if isinstance(report, dict) else None
        if not isinstance(inputs, dict):
            raise ConfigError(f"{path} is JSON but has no 'inputs' object", field="inputs")
        data: dict[str, Any] = dict(inputs)
    else:
        data = parse_key_values(text)

    scenario = scenario_from_mapping(data)
    logger.debug(f"loaded scenario {scenario.name!r} from {path}")
    return scenario


def convert_keys(data: Any) -> Any:
    """Convert camelCase keys to snake_case for Pydantic."""
    if isinstance(data, dict):
        return {camel_to_snake(k): convert_keys(v) for k, v in data.items()}
    if isinstance(data, list):
        return [convert_keys(item) for item in data]
    return data


def camel_to_snake(name: str) -> str:
    """Convert camelCase to snake_case."""
    result = []
    for i, char in enumerate(name):
        if char.isupper() and i > 0:
            result.append("_")
        result.append(char.lower())
    return "".join(result)
