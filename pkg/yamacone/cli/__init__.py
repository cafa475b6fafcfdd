"""CLI module for yamacone."""
