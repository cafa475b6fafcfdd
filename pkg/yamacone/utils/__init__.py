"""Utility functions for yamacone."""

from yamacone.utils.helpers import ensure_dir, format_real, get_data_path, parse_grid, rel_residual

__all__ = ["ensure_dir", "format_real", "get_data_path", "parse_grid", "rel_residual"]
