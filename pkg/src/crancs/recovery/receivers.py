"""Linear receivers: zero-forcing on a support and the two MMSE baselines."""

import numpy as np
import scipy.linalg

from crancs.core.exceptions import DimensionError
from crancs.models.realization import ChannelRealization, ComplexArray, IndexArray
from crancs.models.recovery import RecoveryResult
from crancs.recovery.linalg import pseudo_inverse

REGULARIZATION = 1e-12


def zero_forcing(
    theta: ComplexArray,
    support: IndexArray,
    z: ComplexArray,
) -> tuple[ComplexArray, bool]:
    """x̂_T̂ = Θ_T̂^† z, zero elsewhere; also returns the rank-deficiency flag."""
    if support.size > theta.shape[0]:
        raise DimensionError(
            "Support is larger than the number of measurements",
            operation="zero_forcing",
            details={"support": int(support.size), "rows": theta.shape[0]},
        )
    x = np.zeros(theta.shape[1], dtype=np.complex128)
    if support.size == 0:
        return x, False
    pinv, deficient = pseudo_inverse(theta[:, support])
    x[support] = pinv @ z
    return x, deficient


def genie_zf_baseline(
    theta: ComplexArray,
    true_support: IndexArray,
    z: ComplexArray,
) -> RecoveryResult:
    """Zero-forcing with the true active set revealed."""
    support = np.sort(true_support).astype(np.intp)
    x, deficient = zero_forcing(theta, support, z)
    return RecoveryResult(
        x_final=x,
        support_est=support,
        residual_norm=float(np.linalg.norm(theta @ x - z)),
        detection_correct=True,
        rank_deficient=deficient,
    )


def mmse_joint_filter(
    theta: ComplexArray,
    power: float,
    noise_cov: ComplexArray,
) -> ComplexArray:
    """W = p·Θ^H (p·ΘΘ^H + C)^(-1), every user assumed active at power ``p``."""
    m = theta.shape[0]
    cov = power * (theta @ theta.conj().T) + noise_cov
    cov = cov + REGULARIZATION * float(np.trace(cov).real) / m * np.eye(m)
    factor = scipy.linalg.cho_factor(cov, lower=True)
    # W^H = C_z^(-1) Θ p, and C_z is Hermitian
    w_h = scipy.linalg.cho_solve(factor, power * theta)
    return np.asarray(w_h.conj().T, dtype=np.complex128)


def mmse_joint_baseline(
    theta: ComplexArray,
    z: ComplexArray,
    power: float,
    noise_cov: ComplexArray,
) -> ComplexArray:
    """Conventional joint MMSE multi-user detection on the stacked fronthaul."""
    return mmse_joint_filter(theta, power, noise_cov) @ z


def associate_users(channel: ChannelRealization) -> IndexArray:
    """RRH with the largest large-scale gain for every UE, shape ``(N_c, K)``."""
    return np.argmax(channel.large_scale, axis=0).astype(np.intp)


def mmse_separate_baseline(
    channel: ChannelRealization,
    received: ComplexArray,
    power: float,
    association: IndexArray | None = None,
) -> ComplexArray:
    """Per-RRH scalar MMSE on uncompressed y_i.

    UE (c, k) is estimated from entry c of its serving RRH only:
    x̂ = P·conj(H)·y / (P·Σ_k'|H[i*, c, k']|² + 1).
    """
    if received.shape != (channel.num_rrh, channel.num_subcarriers):
        raise DimensionError(
            "Received signals do not match the channel",
            operation="mmse_separate_baseline",
            details={"received": received.shape},
        )
    serving = associate_users(channel) if association is None else association
    n_c, k = channel.num_subcarriers, channel.users_per_carrier
    carriers = np.repeat(np.arange(n_c)[:, None], k, axis=1)
    slots = np.repeat(np.arange(k)[None, :], n_c, axis=0)

    gains = channel.gains
    h = gains[serving, carriers, slots]
    load = np.sum(np.abs(gains[serving, carriers, :]) ** 2, axis=-1)
    y = received[serving, carriers]
    x = power * np.conj(h) * y / (power * load + 1.0)
    return np.asarray(x.reshape(n_c * k), dtype=np.complex128)
