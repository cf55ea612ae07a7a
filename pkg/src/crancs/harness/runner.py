"""Seeded Monte Carlo sweeps over one scenario variable."""

import math
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any

from crancs import __version__
from crancs.analysis.bounds import corollary1_bounds, theorem4_capacity_bounds
from crancs.core.config import Settings, get_settings
from crancs.core.exceptions import CranError
from crancs.core.logging import experiment_context, get_logger
from crancs.harness.metrics import (
    DetectionRateMetric,
    InvalidTrialsMetric,
    ThroughputMetric,
    WallTimeMetric,
)
from crancs.harness.trial import TrialOutcome, run_trial
from crancs.models.experiment import ExperimentSpec, ResultRow, Scheme, SolverConfig
from crancs.models.scenario import ScenarioConfig

logger = get_logger(__name__)

LOG_BASE = 2.0

ProgressCallback = Callable[[int, int], None]


@dataclass
class ExperimentResult:
    """Aggregated rows plus the metadata record written next to them."""

    rows: list[ResultRow]
    metadata: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class _TrialJob:
    cfg: ScenarioConfig
    schemes: tuple[Scheme, ...]
    sweep_index: int
    trial_index: int
    solver: SolverConfig


def _execute(job: _TrialJob) -> TrialOutcome:
    return run_trial(
        job.cfg,
        job.schemes,
        job.sweep_index,
        job.trial_index,
        solver=job.solver,
        log_base=LOG_BASE,
    )


def bound_overlays(spec: ExperimentSpec) -> list[dict[str, Any]]:
    """Per-active-user theory curves at every sweep value."""
    overlays = spec.bound_overlays
    if not (overlays.theorem4 or overlays.corollary1):
        return []
    curves: list[dict[str, Any]] = []
    for value in spec.sweep_values:
        cfg = spec.scenario_for(value)
        s = cfg.num_active
        if s == 0:
            continue
        point: dict[str, Any] = {"sweep_value": value}
        try:
            if overlays.theorem4:
                lower, upper = theorem4_capacity_bounds(
                    s, cfg.num_rrh, cfg.compression_rate, cfg.transmit_snr,
                    overlays.delta, overlays.pr_rip, LOG_BASE,
                )
                point["theorem4_lower"] = lower / s
                point["theorem4_upper"] = upper / s
            if overlays.corollary1:
                lower, _ = corollary1_bounds(
                    s, cfg.num_rrh, cfg.compression_rate, cfg.transmit_snr,
                    overlays.delta, cfg.total_users, LOG_BASE,
                )
                point["corollary1_lower"] = lower / s
        except CranError as e:
            logger.warning("Bound overlay skipped", sweep_value=value, error=str(e))
            continue
        curves.append(point)
    return curves


def _aggregate(
    spec: ExperimentSpec,
    sweep_index: int,
    trials: list[TrialOutcome],
) -> list[ResultRow]:
    value = spec.sweep_values[sweep_index]
    cfg = spec.scenario_for(value)
    throughput, detection = ThroughputMetric(), DetectionRateMetric()
    invalid, wall = InvalidTrialsMetric(), WallTimeMetric()

    rows = []
    for scheme in spec.schemes:
        tput = throughput.compute(trials, scheme)
        invalid_count = int(invalid.compute(trials, scheme).value)
        rows.append(
            ResultRow(
                sweep_value=value,
                scheme=scheme,
                mean_per_active_user_throughput=tput.value,
                ci_halfwidth=tput.details["ci"],
                detection_rate=detection.compute(trials, scheme).value,
                invalid_trials=invalid_count,
                wall_time_ms=wall.compute(trials, scheme).value,
                valid_trials=len(trials) - invalid_count,
                num_measurements=cfg.measurements,
                bits_per_dimension=cfg.quantizer.bits_per_dimension
                if cfg.quantizer.enabled
                else None,
            )
        )
    return rows


def run_experiment(
    spec: ExperimentSpec,
    settings: Settings | None = None,
    progress: ProgressCallback | None = None,
) -> ExperimentResult:
    """Run ``n_trials`` paired trials per sweep value and aggregate per scheme.

    Trials are keyed by (sweep index, trial index) under the scenario's master
    seed, so the numbers do not depend on the worker count or scheduling.
    """
    settings = settings or get_settings()
    with experiment_context(spec.name, spec.base.master_seed):
        return _run_sweep(spec, settings, progress)


def _run_sweep(
    spec: ExperimentSpec,
    settings: Settings,
    progress: ProgressCallback | None,
) -> ExperimentResult:
    jobs = [
        _TrialJob(
            cfg=spec.scenario_for(value),
            schemes=tuple(spec.schemes),
            sweep_index=sweep_index,
            trial_index=trial_index,
            solver=spec.solver,
        )
        for sweep_index, value in enumerate(spec.sweep_values)
        for trial_index in range(spec.n_trials)
    ]
    total = len(jobs)
    logger.info(
        "Starting sweep",
        name=spec.name,
        sweep_variable=spec.sweep_variable.value,
        points=len(spec.sweep_values),
        trials=spec.n_trials,
        workers=settings.max_workers,
    )

    outcomes: list[TrialOutcome] = []
    if settings.max_workers > 1:
        chunk = max(1, total // (settings.max_workers * 8))
        with ProcessPoolExecutor(max_workers=settings.max_workers) as pool:
            for outcome in pool.map(_execute, jobs, chunksize=chunk):
                outcomes.append(outcome)
                if progress:
                    progress(len(outcomes), total)
    else:
        for job in jobs:
            outcomes.append(_execute(job))
            if progress:
                progress(len(outcomes), total)

    by_point: dict[int, list[TrialOutcome]] = {i: [] for i in range(len(spec.sweep_values))}
    for outcome in sorted(outcomes, key=lambda o: (o.sweep_index, o.trial_index)):
        by_point[outcome.sweep_index].append(outcome)

    rows: list[ResultRow] = []
    for sweep_index, trials in by_point.items():
        rows.extend(_aggregate(spec, sweep_index, trials))

    violations: dict[str, int] = {}
    for outcome in outcomes:
        for check, count in outcome.violations.items():
            violations[check] = violations.get(check, 0) + count

    metadata: dict[str, Any] = {
        "name": spec.name,
        "version": __version__,
        "schema_version": spec.schema_version,
        "sweep_variable": spec.sweep_variable.value,
        "log_base": LOG_BASE,
        "unit": "bits",
        "config": spec.model_dump(mode="json"),
        "check_violations": violations,
        "bound_overlays": bound_overlays(spec),
        "invalid_by_scheme": {
            scheme.value: sum(r.invalid_trials for r in rows if r.scheme == scheme)
            for scheme in spec.schemes
        },
    }
    logger.info(
        "Sweep finished",
        name=spec.name,
        rows=len(rows),
        invalid=sum(r.invalid_trials for r in rows),
        violations=sum(violations.values()),
        mean_wall_ms=math.fsum(r.wall_time_ms for r in rows) / max(len(rows), 1),
    )
    return ExperimentResult(rows=rows, metadata=metadata)
