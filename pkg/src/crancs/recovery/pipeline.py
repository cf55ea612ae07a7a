"""Joint sparse recovery at the BBU pool: BP, detection, then zero-forcing."""

import numpy as np

from crancs.core.logging import get_logger
from crancs.models.experiment import SolverConfig
from crancs.models.recovery import MeasurementSystem, RecoveryResult
from crancs.recovery.basis_pursuit import solve_basis_pursuit
from crancs.recovery.detection import detect_active_users
from crancs.recovery.receivers import zero_forcing

logger = get_logger(__name__)


def run_proposed(
    system: MeasurementSystem,
    solver: SolverConfig | None = None,
) -> RecoveryResult:
    """Rough BP estimate, greedy support detection and ZF on the detected set.

    A BP run that exhausts its iteration budget yields a result with
    ``valid=False``.
    """
    x_rough, stats = solve_basis_pursuit(system.theta, system.z, system.lam, solver)
    detection = detect_active_users(x_rough, system.theta, system.z, system.lam)
    x_final, deficient = zero_forcing(system.theta, detection.support, system.z)

    result = RecoveryResult(
        x_final=x_final,
        support_est=detection.support,
        residual_norm=float(np.linalg.norm(system.theta @ x_final - system.z)),
        x_rough=x_rough,
        solver_stats=stats,
        rank_deficient=deficient or detection.rank_deficient,
        valid=stats.converged,
    )
    if not stats.converged:
        result.notes.append("basis pursuit hit max_iter")
    logger.debug(
        "Recovered signal",
        support_size=result.support_size,
        bp_iterations=stats.iterations,
        residual=result.residual_norm,
    )
    return result
