"""Achievable sum rates of the linear receivers on one realization."""

import math

import numpy as np
import scipy.linalg

from crancs.models.realization import ChannelRealization, ComplexArray, IndexArray
from crancs.models.reports import CapacityReport
from crancs.recovery.linalg import pseudo_inverse


def _rate(per_stream: list[tuple[float, float]], log_base: float) -> tuple[float, list[int]]:
    total = 0.0
    dropped: list[int] = []
    for idx, (p_l, alpha_l) in enumerate(per_stream):
        if not math.isfinite(alpha_l) or alpha_l <= 0.0:
            dropped.append(idx)
            continue
        total += math.log1p(p_l / alpha_l) / math.log(log_base)
    return total, dropped


def _relative_gap(a: ComplexArray, b: ComplexArray) -> float:
    scale = max(float(np.linalg.norm(a)), float(np.linalg.norm(b)), np.finfo(float).tiny)
    return float(np.linalg.norm(a - b)) / scale


def sum_capacity(
    theta: ComplexArray,
    true_support: IndexArray,
    detected_support: IndexArray,
    power: float,
    noise_cov: ComplexArray,
    *,
    log_base: float = 2.0,
    extra_noise_var: float = 0.0,
) -> CapacityReport:
    """R_sum = Σ_l log(1 + P_l/α_l) of zero-forcing on the detected support.

    α_l is the l-th diagonal entry of
    Ψ = Θ_T̂^† (P·Θ_{T∖T̂}Θ_{T∖T̂}^H + C)(Θ_T̂^†)^H with C = AA^H plus any white
    fronthaul quantization noise. P_l = P when the l-th detected user is
    active, 0 otherwise. When T̂ = T the reduced form built from the normal
    equations is computed as well and their gap reported.
    """
    detected = np.asarray(detected_support, dtype=np.intp)
    if detected.size == 0:
        return CapacityReport(r_sum=0.0, log_base=log_base)

    m = theta.shape[0]
    cov = noise_cov + extra_noise_var * np.eye(m)
    truth = set(int(t) for t in true_support)
    missed = np.asarray(sorted(truth - set(int(d) for d in detected)), dtype=np.intp)

    pinv, deficient = pseudo_inverse(theta[:, detected])
    interference = cov.copy()
    if missed.size:
        theta_missed = theta[:, missed]
        interference = interference + power * (theta_missed @ theta_missed.conj().T)
    psi = pinv @ interference @ pinv.conj().T
    alphas = np.real(np.diag(psi))

    per_stream = [
        (power if int(d) in truth else 0.0, float(a)) for d, a in zip(detected, alphas, strict=True)
    ]
    r_sum, dropped = _rate(per_stream, log_base)

    identity_gap = None
    if set(int(d) for d in detected) == truth and not deficient:
        sub = theta[:, detected]
        gram = scipy.linalg.cho_factor(sub.conj().T @ sub, lower=True)
        left = scipy.linalg.cho_solve(gram, sub.conj().T)
        reduced = left @ cov @ left.conj().T
        identity_gap = _relative_gap(psi, reduced)

    return CapacityReport(
        r_sum=r_sum,
        log_base=log_base,
        per_stream=per_stream,
        psi_diag=[float(a) for a in alphas],
        dropped_streams=dropped,
        rank_deficient=deficient,
        identity_gap=identity_gap,
    )


def linear_receiver_capacity(
    filters: ComplexArray,
    theta: ComplexArray,
    true_support: IndexArray,
    power: float,
    noise_cov: ComplexArray,
    *,
    log_base: float = 2.0,
    extra_noise_var: float = 0.0,
) -> CapacityReport:
    """Sum rate of an arbitrary linear receiver ``x̂ = W z`` (one row per user).

    Each active user's stream sees the other active users as interference;
    inactive users carry no power and contribute nothing.
    """
    active = np.asarray(true_support, dtype=np.intp)
    if active.size == 0:
        return CapacityReport(r_sum=0.0, log_base=log_base)

    m = theta.shape[0]
    cov = noise_cov + extra_noise_var * np.eye(m)
    rows = filters[active]
    gains = rows @ theta[:, active]
    signal = power * np.abs(np.diag(gains)) ** 2
    total_interference = power * np.sum(np.abs(gains) ** 2, axis=1) - signal
    noise = np.real(np.einsum("lm,mn,ln->l", rows, cov, rows.conj()))

    per_stream: list[tuple[float, float]] = []
    for sig, interf, nse in zip(signal, total_interference, noise, strict=True):
        useful = sig / power
        alpha = (interf + nse) / useful if useful > 0 else math.inf
        per_stream.append((power, float(alpha)))
    r_sum, dropped = _rate(per_stream, log_base)
    return CapacityReport(
        r_sum=r_sum,
        log_base=log_base,
        per_stream=per_stream,
        psi_diag=[a for _, a in per_stream],
        dropped_streams=dropped,
    )


def separate_receiver_capacity(
    channel: ChannelRealization,
    association: IndexArray,
    true_support: IndexArray,
    power: float,
    *,
    log_base: float = 2.0,
) -> CapacityReport:
    """Sum rate when every UE is decoded by its serving RRH alone.

    The scalar SINR of UE (c, k) at RRH i* counts the other active UEs of
    subcarrier c as interference, plus unit thermal noise.
    """
    active = np.asarray(true_support, dtype=np.intp)
    if active.size == 0:
        return CapacityReport(r_sum=0.0, log_base=log_base)

    k = channel.users_per_carrier
    mask = np.zeros(channel.total_users, dtype=bool)
    mask[active] = True
    mask = mask.reshape(channel.num_subcarriers, k)
    gains2 = np.abs(channel.gains) ** 2

    per_stream: list[tuple[float, float]] = []
    for user in active:
        c, slot = divmod(int(user), k)
        i = int(association[c, slot])
        useful = float(gains2[i, c, slot])
        interf = power * float(np.sum(gains2[i, c, mask[c]])) - power * useful
        alpha = (interf + 1.0) / useful if useful > 0 else math.inf
        per_stream.append((power, alpha))
    r_sum, dropped = _rate(per_stream, log_base)
    return CapacityReport(
        r_sum=r_sum,
        log_base=log_base,
        per_stream=per_stream,
        psi_diag=[a for _, a in per_stream],
        dropped_streams=dropped,
    )
