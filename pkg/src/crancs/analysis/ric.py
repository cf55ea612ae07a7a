"""Restricted isometry constants by brute force over column supports."""

import itertools
from dataclasses import dataclass

import numpy as np
from scipy.special import comb

from crancs.core.exceptions import CombinatorialError, DomainError
from crancs.models.realization import ComplexArray

MAX_EXHAUSTIVE_SUPPORTS = 1_000_000
BATCH_SIZE = 4096


@dataclass(frozen=True)
class RicEstimate:
    """δ̂ of order k; a lower bound only when ``exhaustive`` is False."""

    delta: float
    order: int
    exhaustive: bool
    supports_checked: int


def _batch_delta(gram: ComplexArray, supports: np.ndarray) -> float:
    sub = gram[supports[:, :, None], supports[:, None, :]]
    eigs = np.linalg.eigvalsh(sub)
    return float(np.max(np.abs(eigs - 1.0)))


def estimate_ric(
    theta: ComplexArray,
    order: int,
    *,
    samples: int | None = None,
    rng: np.random.Generator | None = None,
    max_supports: int = MAX_EXHAUSTIVE_SUPPORTS,
) -> RicEstimate:
    """max over |S| = k of ‖Θ_S^H Θ_S − I‖₂.

    Smaller supports are covered by eigenvalue interlacing. With ``samples``
    only that many random supports are checked.

    Raises:
        DomainError: if ``order`` exceeds the number of columns
        CombinatorialError: if C(n, k) exceeds ``max_supports`` in exhaustive mode
    """
    n = theta.shape[1]
    if not 0 <= order <= n:
        raise DomainError(f"RIP order {order} outside [0, {n}]", parameter="order")
    if order == 0:
        return RicEstimate(delta=0.0, order=0, exhaustive=True, supports_checked=0)

    gram = theta.conj().T @ theta
    delta = 0.0

    if samples is not None:
        generator = rng if rng is not None else np.random.default_rng()
        picks = np.asarray(
            [np.sort(generator.choice(n, size=order, replace=False)) for _ in range(samples)],
            dtype=np.intp,
        ).reshape(samples, order)
        for start in range(0, samples, BATCH_SIZE):
            delta = max(delta, _batch_delta(gram, picks[start : start + BATCH_SIZE]))
        return RicEstimate(delta=delta, order=order, exhaustive=False, supports_checked=samples)

    total = int(comb(n, order, exact=True))
    if total > max_supports:
        raise CombinatorialError(
            f"C({n}, {order}) = {total} supports exceeds the exhaustive limit; use sampling",
            details={"columns": n, "order": order, "limit": max_supports},
        )
    for batch in itertools.batched(itertools.combinations(range(n), order), BATCH_SIZE):
        delta = max(delta, _batch_delta(gram, np.asarray(batch, dtype=np.intp)))
    return RicEstimate(delta=delta, order=order, exhaustive=True, supports_checked=total)
