"""Random realizations: geometry, channel and sparse signal."""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

FloatArray = NDArray[np.float64]
ComplexArray = NDArray[np.complex128]
IndexArray = NDArray[np.intp]


@dataclass(frozen=True)
class Geometry:
    """Positions of the RRHs and UEs inside the cell disk (meters, origin at center).

    ``ue_positions`` has shape ``(N_c, K, 2)``: the UE of subcarrier ``c`` and
    slot ``k`` sits at ``ue_positions[c, k]``.
    """

    rrh_positions: FloatArray
    ue_positions: FloatArray
    cell_radius: float

    @property
    def num_rrh(self) -> int:
        return int(self.rrh_positions.shape[0])

    def distances(self) -> FloatArray:
        """RRH-to-UE distances, shape ``(M, N_c, K)``."""
        diff = self.ue_positions[None, :, :, :] - self.rrh_positions[:, None, None, :]
        return np.asarray(np.linalg.norm(diff, axis=-1), dtype=np.float64)


@dataclass(frozen=True)
class ChannelRealization:
    """Large- and small-scale fading of every RRH/UE pair.

    Arrays are indexed ``[i, c, k]`` (RRH, subcarrier, user slot). Column
    ``c*K + k`` of the stacked signal belongs to that UE.
    """

    large_scale: FloatArray
    small_scale: ComplexArray

    @property
    def gains(self) -> ComplexArray:
        """H[i, c, k] = g[i, c, k] * h[i, c, k]."""
        return self.large_scale * self.small_scale

    @property
    def num_rrh(self) -> int:
        return int(self.large_scale.shape[0])

    @property
    def num_subcarriers(self) -> int:
        return int(self.large_scale.shape[1])

    @property
    def users_per_carrier(self) -> int:
        return int(self.large_scale.shape[2])

    @property
    def total_users(self) -> int:
        return self.num_subcarriers * self.users_per_carrier

    @property
    def peak_gain(self) -> float:
        """Empirical upper bound ḡ of the large-scale amplitudes."""
        return float(self.large_scale.max())

    def normalization_error(self) -> float:
        """max over UEs of |Σ_i g² − M| / M."""
        m = self.num_rrh
        power = np.sum(self.large_scale**2, axis=0)
        return float(np.max(np.abs(power - m)) / m)

    def per_rrh_matrix(self, rrh: int) -> ComplexArray:
        """Dense banded ``N_c × K·N_c`` matrix H_i."""
        n_c, k = self.num_subcarriers, self.users_per_carrier
        matrix = np.zeros((n_c, n_c * k), dtype=np.complex128)
        gains = self.gains[rrh]
        for c in range(n_c):
            matrix[c, c * k : (c + 1) * k] = gains[c]
        return matrix

    def stacked_matrix(self) -> ComplexArray:
        """All H_i stacked vertically, shape ``(M·N_c, K·N_c)``."""
        return np.vstack([self.per_rrh_matrix(i) for i in range(self.num_rrh)])


@dataclass(frozen=True)
class SparseSignal:
    """Uplink transmit vector with its true support (sorted, 0-based)."""

    x: ComplexArray
    support: IndexArray
    powers: FloatArray

    @property
    def sparsity(self) -> int:
        return int(self.support.size)

    @property
    def min_power(self) -> float:
        """P_min over the active users (inf when nobody transmits)."""
        return float(self.powers.min()) if self.powers.size else float("inf")
