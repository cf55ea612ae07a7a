"""Linear-algebra helpers shared by the receivers."""

import numpy as np
import scipy.linalg

from crancs.models.realization import ComplexArray

PINV_RTOL = 1e-10
DEPENDENT_COLUMN_TOL = 1e-10


def pseudo_inverse(matrix: ComplexArray, rtol: float = PINV_RTOL) -> tuple[ComplexArray, bool]:
    """SVD pseudoinverse with rank cut at ``rtol`` times the largest singular value.

    Returns ``(pinv, rank_deficient)``; an empty column set gives an empty inverse.
    """
    rows, cols = matrix.shape
    if cols == 0 or rows == 0:
        return np.zeros((cols, rows), dtype=np.complex128), False
    pinv, rank = scipy.linalg.pinv(matrix, atol=0.0, rtol=rtol, return_rank=True)
    return np.asarray(pinv, dtype=np.complex128), bool(rank < cols)


def smallest_singular_value(matrix: ComplexArray) -> float:
    if matrix.size == 0:
        return 0.0
    return float(scipy.linalg.svdvals(matrix).min())


class IncrementalProjector:
    """Residual of z after projection onto a growing column span.

    The orthonormal basis is extended by Gram-Schmidt with one
    re-orthogonalisation pass, so each insertion costs O(rows·rank).
    """

    def __init__(self, z: ComplexArray) -> None:
        self._rows = z.shape[0]
        self._basis = np.zeros((self._rows, 0), dtype=np.complex128)
        self._residual = np.array(z, dtype=np.complex128)
        self.rank_deficient = False

    @property
    def rank(self) -> int:
        return int(self._basis.shape[1])

    @property
    def basis(self) -> ComplexArray:
        return self._basis

    @property
    def residual(self) -> ComplexArray:
        return self._residual

    @property
    def residual_norm(self) -> float:
        return float(np.linalg.norm(self._residual))

    def add(self, column: ComplexArray) -> bool:
        """Insert a column; returns False when it lies in the current span."""
        norm = float(np.linalg.norm(column))
        w = np.array(column, dtype=np.complex128)
        for _ in range(2):
            w -= self._basis @ (self._basis.conj().T @ w)
        w_norm = float(np.linalg.norm(w))
        if norm == 0.0 or w_norm <= DEPENDENT_COLUMN_TOL * norm:
            self.rank_deficient = True
            return False

        q = w / w_norm
        self._basis = np.column_stack((self._basis, q))
        self._residual = self._residual - q * np.vdot(q, self._residual)
        return True
