"""Configuration module for yamacone."""

from yamacone.config.loader import get_settings_path, load_config, load_settings
from yamacone.config.schema import ScenarioConfig, Settings

__all__ = ["ScenarioConfig", "Settings", "get_settings_path", "load_config", "load_settings"]
