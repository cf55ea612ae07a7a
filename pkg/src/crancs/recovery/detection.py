"""Greedy active-user detection from the basis pursuit estimate."""

from dataclasses import dataclass

import numpy as np

from crancs.core.exceptions import DimensionError
from crancs.models.realization import ComplexArray, IndexArray
from crancs.recovery.linalg import IncrementalProjector


@dataclass(frozen=True)
class Detection:
    """Detected support T̂ (sorted) and the projection residual it reached."""

    support: IndexArray
    order: IndexArray
    residual_norm: float
    rank_deficient: bool


def magnitude_order(x_rough: ComplexArray) -> IndexArray:
    """Indices by descending |x̂(i)|, lower index first on ties."""
    return np.argsort(-np.abs(x_rough), kind="stable").astype(np.intp)


def detect_active_users(
    x_rough: ComplexArray,
    theta: ComplexArray,
    z: ComplexArray,
    lam: float,
) -> Detection:
    """Grow T̂ along the magnitude order until ‖(I − Θ_T̂Θ_T̂^†)z‖ ≤ λ.

    Growth also stops at |T̂| = min(M·R, K·N_c). A column already in the span
    of the chosen ones still joins T̂ but leaves the residual unchanged.
    """
    m, n = theta.shape
    if x_rough.shape != (n,) or z.shape != (m,):
        raise DimensionError(
            "Detection inputs disagree with Θ",
            operation="detect_active_users",
            details={"theta": theta.shape, "x_rough": x_rough.shape, "z": z.shape},
        )

    cap = min(m, n)
    order = magnitude_order(x_rough)
    projector = IncrementalProjector(z)
    chosen: list[int] = []
    for idx in order[:cap]:
        projector.add(theta[:, idx])
        chosen.append(int(idx))
        if projector.residual_norm <= lam:
            break

    return Detection(
        support=np.sort(np.asarray(chosen, dtype=np.intp)),
        order=np.asarray(chosen, dtype=np.intp),
        residual_norm=projector.residual_norm if chosen else float(np.linalg.norm(z)),
        rank_deficient=projector.rank_deficient,
    )
