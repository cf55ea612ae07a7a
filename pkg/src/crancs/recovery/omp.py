"""Orthogonal matching pursuit detection followed by zero-forcing."""

import numpy as np

from crancs.models.realization import ComplexArray
from crancs.models.recovery import RecoveryResult
from crancs.recovery.linalg import IncrementalProjector
from crancs.recovery.receivers import zero_forcing


def omp_zf_baseline(theta: ComplexArray, z: ComplexArray, lam: float) -> RecoveryResult:
    """Select columns by |⟨θ_j/‖θ_j‖, r⟩| until ‖r‖ ≤ λ or M·R picks, then ZF."""
    m, n = theta.shape
    norms = np.linalg.norm(theta, axis=0)
    normalized = theta / np.where(norms > 0, norms, 1.0)

    cap = min(m, n)
    projector = IncrementalProjector(z)
    available = np.ones(n, dtype=bool)
    chosen: list[int] = []
    while projector.residual_norm > lam and len(chosen) < cap:
        scores = np.abs(normalized.conj().T @ projector.residual)
        scores[~available] = -1.0
        idx = int(np.argmax(scores))
        available[idx] = False
        chosen.append(idx)
        projector.add(theta[:, idx])

    support = np.sort(np.asarray(chosen, dtype=np.intp))
    x, deficient = zero_forcing(theta, support, z)
    return RecoveryResult(
        x_final=x,
        support_est=support,
        residual_norm=float(np.linalg.norm(theta @ x - z)),
        rank_deficient=deficient or projector.rank_deficient,
        notes=[f"omp_iterations={len(chosen)}"],
    )
