"""Utility functions for yamacone."""

from pathlib import Path

from yamacone.errors import DomainError


def ensure_dir(path: Path) -> Path:
    """Ensure a directory exists, creating it if necessary."""
    path.mkdir(parents=True, exist_ok=True)
    return path


def get_data_path() -> Path:
    """Get the yamacone data directory (~/.yamacone)."""
    return Path.home() / ".yamacone"


def format_real(value: float, digits: int = 17) -> str:
    """Format a float with ``digits`` significant digits."""
    return f"{value:.{digits}g}"


def rel_residual(a: float, b: float) -> float:
    """Relative difference of two reals, guarded at unit scale."""
    return abs(a - b) / max(1.0, abs(a), abs(b))


def parse_grid(text: str) -> tuple[int, int]:
    """Parse a ``NXxNY`` grid specification such as ``8x8``."""
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise DomainError(f"grid must look like NXxNY, got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError as e:
        raise DomainError(f"grid must look like NXxNY, got {text!r}") from e
