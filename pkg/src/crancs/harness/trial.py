"""One Monte Carlo trial: a shared realization seen by every receiver."""

import math
import time
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np

from crancs.analysis.bounds import resolve_lambda
from crancs.analysis.capacity import (
    linear_receiver_capacity,
    separate_receiver_capacity,
    sum_capacity,
)
from crancs.core.exceptions import CranError, TrialError
from crancs.core.logging import get_logger
from crancs.core.rng import RandomStreams
from crancs.harness.checks import CheckRegistry, TrialContext
from crancs.models.experiment import Scheme, SolverConfig
from crancs.models.realization import ComplexArray
from crancs.models.recovery import RecoveryResult
from crancs.models.reports import CapacityReport
from crancs.models.scenario import ScenarioConfig
from crancs.recovery.omp import omp_zf_baseline
from crancs.recovery.pipeline import run_proposed
from crancs.recovery.receivers import (
    associate_users,
    genie_zf_baseline,
    mmse_joint_filter,
    mmse_separate_baseline,
)
from crancs.recovery.system import Realization, draw_realization

logger = get_logger(__name__)


@dataclass(frozen=True)
class SchemeOutcome:
    """Per-scheme numbers of one trial; picklable for the worker pool."""

    scheme: Scheme
    valid: bool
    r_sum: float = math.nan
    detection_correct: bool | None = None
    support_size: int = 0
    wall_time_ms: float = 0.0
    error: str | None = None


@dataclass(frozen=True)
class TrialOutcome:
    """Everything the aggregation needs from one trial."""

    sweep_index: int
    trial_index: int
    num_active: int
    outcomes: dict[Scheme, SchemeOutcome]
    violations: dict[str, int] = field(default_factory=dict)

    def throughput(self, scheme: Scheme) -> float:
        """Per-active-user throughput R_sum/s; NaN when s = 0 or the scheme failed."""
        outcome = self.outcomes[scheme]
        if not outcome.valid or self.num_active == 0:
            return math.nan
        return outcome.r_sum / self.num_active


@dataclass
class _SchemeRun:
    result: RecoveryResult
    capacity: CapacityReport


def _all_users_detected(realization: Realization) -> bool:
    return realization.signal.sparsity == realization.channel.total_users


def _run_scheme(
    scheme: Scheme,
    cfg: ScenarioConfig,
    realization: Realization,
    noise_cov: ComplexArray,
    solver: SolverConfig,
    log_base: float,
) -> _SchemeRun:
    system = realization.system
    support = realization.signal.support
    power = cfg.transmit_snr
    q_var = system.quantization_noise_var

    match scheme:
        case Scheme.PROPOSED:
            result = run_proposed(system, solver)
            if not result.valid:
                raise TrialError("basis pursuit did not converge", scheme=scheme.value)
            capacity = sum_capacity(
                system.theta, support, result.support_est, power, noise_cov,
                log_base=log_base, extra_noise_var=q_var,
            )
        case Scheme.GENIE_ZF:
            result = genie_zf_baseline(system.theta, support, system.z)
            capacity = sum_capacity(
                system.theta, support, support, power, noise_cov,
                log_base=log_base, extra_noise_var=q_var,
            )
        case Scheme.OMP_ZF:
            result = omp_zf_baseline(system.theta, system.z, system.lam)
            capacity = sum_capacity(
                system.theta, support, result.support_est, power, noise_cov,
                log_base=log_base, extra_noise_var=q_var,
            )
        case Scheme.MMSE_JOINT:
            prior = cfg.mmse_prior_fraction * power
            cov = noise_cov + q_var * np.eye(system.num_rows)
            filters = mmse_joint_filter(system.theta, prior, cov)
            every = np.arange(system.num_columns, dtype=np.intp)
            result = RecoveryResult(
                x_final=filters @ system.z,
                support_est=every,
                residual_norm=math.nan,
                detection_correct=_all_users_detected(realization),
            )
            capacity = linear_receiver_capacity(
                filters, system.theta, support, power, noise_cov,
                log_base=log_base, extra_noise_var=q_var,
            )
        case Scheme.MMSE_SEPARATE:
            association = associate_users(realization.channel)
            x = mmse_separate_baseline(realization.channel, realization.received, power, association)
            result = RecoveryResult(
                x_final=x,
                support_est=np.arange(x.size, dtype=np.intp),
                residual_norm=math.nan,
                detection_correct=_all_users_detected(realization),
            )
            capacity = separate_receiver_capacity(
                realization.channel, association, support, power, log_base=log_base
            )
        case _:
            raise TrialError(f"unknown scheme {scheme}", scheme=str(scheme))

    if result.detection_correct is None:
        result.mark_detection(support)
    return _SchemeRun(result=result, capacity=capacity)


def run_trial(
    cfg: ScenarioConfig,
    schemes: Sequence[Scheme],
    sweep_index: int,
    trial_index: int,
    solver: SolverConfig | None = None,
    log_base: float = 2.0,
) -> TrialOutcome:
    """Draw one realization and run every requested receiver on it.

    Failures are confined to the scheme (or, for a failed draw, the trial)
    and reported as invalid outcomes.
    """
    solver = solver or SolverConfig()
    log = logger.bind(sweep_index=sweep_index, trial_index=trial_index)
    streams = RandomStreams.from_seed(cfg.master_seed, sweep_index, trial_index)

    try:
        realization = draw_realization(cfg, streams, resolve_lambda(cfg))
        noise_cov = realization.system.noise_covariance()
    except CranError as e:
        log.warning("Trial draw failed", error=str(e))
        return TrialOutcome(
            sweep_index=sweep_index,
            trial_index=trial_index,
            num_active=cfg.num_active,
            outcomes={s: SchemeOutcome(scheme=s, valid=False, error=str(e)) for s in schemes},
        )

    outcomes: dict[Scheme, SchemeOutcome] = {}
    runs: dict[Scheme, _SchemeRun] = {}
    for scheme in schemes:
        start = time.perf_counter()
        try:
            run = _run_scheme(scheme, cfg, realization, noise_cov, solver, log_base)
        except (CranError, np.linalg.LinAlgError, ValueError) as e:
            elapsed = (time.perf_counter() - start) * 1000.0
            log.warning("Scheme invalidated", scheme=scheme.value, error=str(e))
            outcomes[scheme] = SchemeOutcome(
                scheme=scheme, valid=False, wall_time_ms=elapsed, error=str(e)
            )
            continue
        elapsed = (time.perf_counter() - start) * 1000.0
        runs[scheme] = run
        result = run.result
        outcomes[scheme] = SchemeOutcome(
            scheme=scheme,
            valid=True,
            r_sum=run.capacity.r_sum,
            detection_correct=result.detection_correct,
            support_size=result.support_size,
            wall_time_ms=elapsed,
        )
        log.debug("Scheme finished", scheme=scheme.value, wall_time_ms=elapsed)

    context = TrialContext(
        realization=realization,
        results={s: r.result for s, r in runs.items()},
        capacities={s: r.capacity for s, r in runs.items()},
    )
    violations = CheckRegistry().run_all(context)
    for violation in violations:
        log.warning("Check violated", check=violation.check, scheme=violation.scheme, message=violation.message)

    counts: dict[str, int] = {}
    for violation in violations:
        counts[violation.check] = counts.get(violation.check, 0) + 1
    return TrialOutcome(
        sweep_index=sweep_index,
        trial_index=trial_index,
        num_active=cfg.num_active,
        outcomes=outcomes,
        violations=counts,
    )
