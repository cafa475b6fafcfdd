"""Numerical verification suites."""

from yamacone.verify.suites import SUITES, CheckResult, representative_cases, run_suite

__all__ = ["SUITES", "CheckResult", "representative_cases", "run_suite"]
