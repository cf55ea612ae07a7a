"""Aggregate measurement system, joint sparse recovery and baseline receivers."""

from crancs.recovery.basis_pursuit import BallProjector, l1_norm, soft_threshold, solve_basis_pursuit
from crancs.recovery.detection import Detection, detect_active_users, magnitude_order
from crancs.recovery.linalg import IncrementalProjector, pseudo_inverse, smallest_singular_value
from crancs.recovery.omp import omp_zf_baseline
from crancs.recovery.oracle import solve_basis_pursuit_reference
from crancs.recovery.pipeline import run_proposed
from crancs.recovery.receivers import (
    associate_users,
    genie_zf_baseline,
    mmse_joint_baseline,
    mmse_joint_filter,
    mmse_separate_baseline,
    zero_forcing,
)
from crancs.recovery.system import (
    Realization,
    assemble_theta,
    build_measurement_system,
    draw_realization,
)

__all__ = [
    "assemble_theta",
    "build_measurement_system",
    "draw_realization",
    "Realization",
    "solve_basis_pursuit",
    "solve_basis_pursuit_reference",
    "BallProjector",
    "soft_threshold",
    "l1_norm",
    "detect_active_users",
    "magnitude_order",
    "Detection",
    "zero_forcing",
    "genie_zf_baseline",
    "mmse_joint_filter",
    "mmse_joint_baseline",
    "mmse_separate_baseline",
    "associate_users",
    "omp_zf_baseline",
    "run_proposed",
    "IncrementalProjector",
    "pseudo_inverse",
    "smallest_singular_value",
]
