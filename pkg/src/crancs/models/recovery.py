"""Aggregate measurement system and recovery results."""

from dataclasses import dataclass, field

import numpy as np

from crancs.models.realization import ComplexArray, IndexArray


@dataclass(frozen=True)
class MeasurementSystem:
    """What the BBU pool sees once every RRH has forwarded its measurements.

    ``z`` is the (possibly quantized) stacked fronthaul vector; ``noise`` is the
    aggregate thermal noise [A_1 n_1; ...; A_M n_M] and ``quantization_error``
    is ẑ − z (zeros when quantization is off). Both are diagnostics only.
    """

    theta: ComplexArray
    z: ComplexArray
    compression: tuple[ComplexArray, ...]
    noise: ComplexArray
    quantization_error: ComplexArray
    lam: float

    @property
    def num_rows(self) -> int:
        return int(self.theta.shape[0])

    @property
    def num_columns(self) -> int:
        return int(self.theta.shape[1])

    @property
    def detection_cap(self) -> int:
        """Largest admissible |T̂|: min(M·R, K·N_c)."""
        return min(self.num_rows, self.num_columns)

    def a_block(self) -> ComplexArray:
        """diag(A_1, ..., A_M), shape ``(M·R, M·N_c)``."""
        rows = sum(a.shape[0] for a in self.compression)
        cols = sum(a.shape[1] for a in self.compression)
        block = np.zeros((rows, cols), dtype=np.complex128)
        r0 = c0 = 0
        for a in self.compression:
            block[r0 : r0 + a.shape[0], c0 : c0 + a.shape[1]] = a
            r0 += a.shape[0]
            c0 += a.shape[1]
        return block

    def noise_covariance(self) -> ComplexArray:
        """A A^H, block diagonal with blocks A_i A_i^H."""
        a = self.a_block()
        return a @ a.conj().T

    @property
    def quantization_noise_var(self) -> float:
        """Per-entry variance of the fronthaul quantization error, ‖n̂‖²/(M·R)."""
        return float(np.vdot(self.quantization_error, self.quantization_error).real) / self.num_rows


@dataclass(frozen=True)
class SolverStats:
    """Convergence record of the basis pursuit solver."""

    iterations: int
    converged: bool
    primal_residual: float
    dual_residual: float
    feasibility_gap: float
    rho: float


@dataclass
class RecoveryResult:
    """Output of one receiver on one trial."""

    x_final: ComplexArray
    support_est: IndexArray
    residual_norm: float
    x_rough: ComplexArray | None = None
    solver_stats: SolverStats | None = None
    detection_correct: bool | None = None
    rank_deficient: bool = False
    valid: bool = True
    notes: list[str] = field(default_factory=list)

    @property
    def support_size(self) -> int:
        return int(self.support_est.size)

    def mark_detection(self, true_support: IndexArray) -> None:
        """Set ``detection_correct`` by comparing sets with the true support.

        With nobody active, a detector that always seeds T̂ with one index is
        counted correct when its rough estimate is identically zero.
        """
        if true_support.size == 0 and self.x_rough is not None and self.support_est.size:
            self.detection_correct = not bool(np.any(self.x_rough))
            return
        self.detection_correct = bool(
            np.array_equal(np.sort(self.support_est), np.sort(true_support))
        )
