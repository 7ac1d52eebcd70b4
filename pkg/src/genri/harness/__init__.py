"""Seeded instance generation and the property-suite runner."""
from __future__ import annotations

from .checks import CHECKS, SUITES, Outcome, betweenness_check
from .generate import InstanceSpec, generate, witness_points
from .runner import CheckReport, report_lines, run_check, run_suite, suite_exit_code

__all__ = [
    "CHECKS", "SUITES", "Outcome", "betweenness_check", "InstanceSpec", "generate", "witness_points",
    "CheckReport", "report_lines", "run_check", "run_suite", "suite_exit_code",
]
