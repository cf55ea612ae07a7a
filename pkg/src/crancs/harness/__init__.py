"""Batch Monte Carlo harness: config files, trials, sweeps and result files."""

from crancs.harness.checks import (
    CheckRegistry,
    CheckViolation,
    TrialCheck,
    TrialContext,
    register_check,
)
from crancs.harness.config_file import apply_overrides, load_experiment_spec, spec_from_document
from crancs.harness.results import CSV_HEADER, emit_results, parse_results
from crancs.harness.runner import ExperimentResult, bound_overlays, run_experiment
from crancs.harness.trends import GenieGap, check_trends, genie_gaps, scheme_curve
from crancs.harness.trial import SchemeOutcome, TrialOutcome, run_trial

__all__ = [
    "load_experiment_spec",
    "spec_from_document",
    "apply_overrides",
    "run_trial",
    "TrialOutcome",
    "SchemeOutcome",
    "run_experiment",
    "ExperimentResult",
    "bound_overlays",
    "emit_results",
    "parse_results",
    "CSV_HEADER",
    "CheckRegistry",
    "TrialCheck",
    "TrialContext",
    "CheckViolation",
    "register_check",
    "check_trends",
    "genie_gaps",
    "GenieGap",
    "scheme_curve",
]
