"""Complex basis pursuit: min ‖x‖₁ subject to ‖Θx − z‖ ≤ λ.

Solved by ADMM on the split x = y, alternating an exact projection onto the
residual ball with complex soft-thresholding. The projection uses a thin SVD
of Θ computed once per solve and a scalar secular equation for the ball
multiplier.
"""

import numpy as np
import scipy.linalg
from scipy.optimize import brentq

from crancs.core.exceptions import DimensionError, SolverError
from crancs.core.logging import get_logger
from crancs.models.experiment import SolverConfig
from crancs.models.realization import ComplexArray
from crancs.models.recovery import SolverStats

logger = get_logger(__name__)

FEASIBILITY_SLACK = 1e-6
RANK_RTOL = 1e-10
RHO_BALANCE = 10.0
RHO_SCALE = 2.0


def soft_threshold(v: ComplexArray, t: float) -> ComplexArray:
    """Complex shrinkage: v·max(0, 1 − t/|v|)."""
    mag = np.abs(v)
    scale = np.where(mag > t, 1.0 - t / np.maximum(mag, np.finfo(float).tiny), 0.0)
    return np.asarray(v * scale, dtype=np.complex128)


def l1_norm(x: ComplexArray) -> float:
    """Sum of complex magnitudes."""
    return float(np.sum(np.abs(x)))


class BallProjector:
    """Euclidean projection onto {x : ‖Θx − z‖ ≤ λ}."""

    def __init__(self, theta: ComplexArray, z: ComplexArray, lam: float) -> None:
        u, s, vh = scipy.linalg.svd(theta, full_matrices=False)
        keep = s > RANK_RTOL * s[0] if s.size else np.zeros(0, bool)
        self._u = u[:, keep]
        self._s = s[keep]
        self._vh = vh[keep]
        self._c = self._u.conj().T @ z

        perp = float(np.linalg.norm(z - self._u @ self._c))
        if perp > lam * (1.0 + 1e-12):
            raise SolverError(
                "Residual ball does not meet the range of Θ",
                details={"out_of_range_norm": perp, "lambda": lam},
            )
        self._lam_eff = float(np.sqrt(max(lam**2 - perp**2, 0.0)))

    def __call__(self, v: ComplexArray) -> ComplexArray:
        s, c = self._s, self._c
        if s.size == 0:
            return v.copy()
        b = self._vh @ v
        gap = s * b - c
        weight = np.abs(gap) ** 2
        total = float(weight.sum())
        lam2 = self._lam_eff**2

        if total <= lam2:
            a = b
        elif self._lam_eff <= 1e-14 * max(1.0, float(np.linalg.norm(c))):
            a = c / s
        else:

            def excess(mu: float) -> float:
                return float(np.sum(weight / (1.0 + mu * s**2) ** 2)) - lam2

            # excess(hi) <= 0 since every term shrinks at least as fast as the s_min one
            hi = 1.01 * (np.sqrt(total) / self._lam_eff - 1.0) / float(s.min()) ** 2
            if hi <= 0.0 or excess(hi) > 0.0:
                a = b
            else:
                mu = brentq(excess, 0.0, hi, xtol=1e-300, rtol=1e-14, maxiter=500)
                a = (b + mu * s * c) / (1.0 + mu * s**2)

        return np.asarray(v - self._vh.conj().T @ (b - a), dtype=np.complex128)


def solve_basis_pursuit(
    theta: ComplexArray,
    z: ComplexArray,
    lam: float,
    config: SolverConfig | None = None,
) -> tuple[ComplexArray, SolverStats]:
    """Rough estimate x̂ of the sparse signal.

    The returned point always satisfies ‖Θx̂ − z‖ ≤ λ(1 + 1e-6); when the
    iteration budget runs out ``stats.converged`` is False.

    Raises:
        DimensionError: if ``z`` does not match the rows of Θ
        SolverError: if the ball misses the column space of Θ
    """
    config = config or SolverConfig()
    if lam < 0:
        raise SolverError("Basis pursuit threshold must be non-negative", details={"lambda": lam})
    m, n = theta.shape
    if z.shape != (m,):
        raise DimensionError(
            "Measurement vector does not match Θ",
            operation="solve_basis_pursuit",
            details={"theta": theta.shape, "z": z.shape},
        )

    if float(np.linalg.norm(z)) <= lam:
        return np.zeros(n, dtype=np.complex128), SolverStats(
            iterations=0,
            converged=True,
            primal_residual=0.0,
            dual_residual=0.0,
            feasibility_gap=0.0,
            rho=config.rho,
        )

    project = BallProjector(theta, z, lam)
    rho = config.rho
    tol = config.tolerance
    x = np.zeros(n, dtype=np.complex128)
    y = np.zeros(n, dtype=np.complex128)
    u = np.zeros(n, dtype=np.complex128)
    primal = dual = float("inf")
    converged = False
    iterations = 0

    for iterations in range(1, config.max_iter + 1):
        x = project(y - u)
        y_prev = y
        y = soft_threshold(x + u, 1.0 / rho)
        u = u + x - y

        primal = float(np.linalg.norm(x - y))
        dual = rho * float(np.linalg.norm(y - y_prev))
        eps_primal = tol * (1.0 + max(float(np.linalg.norm(x)), float(np.linalg.norm(y))))
        eps_dual = tol * (1.0 + rho * float(np.linalg.norm(u)))
        if primal <= eps_primal and dual <= eps_dual:
            converged = True
            break

        if config.adaptive_rho:
            if primal > RHO_BALANCE * dual:
                rho *= RHO_SCALE
                u /= RHO_SCALE
            elif dual > RHO_BALANCE * primal:
                rho /= RHO_SCALE
                u *= RHO_SCALE

    # y is sparse but only approximately feasible; x is feasible by construction
    bound = lam * (1.0 + FEASIBILITY_SLACK)
    y_residual = float(np.linalg.norm(theta @ y - z))
    x_hat = y if y_residual <= bound else x
    residual = float(np.linalg.norm(theta @ x_hat - z))

    if not converged:
        logger.warning(
            "Basis pursuit did not converge",
            iterations=iterations,
            primal_residual=primal,
            dual_residual=dual,
        )

    return x_hat, SolverStats(
        iterations=iterations,
        converged=converged,
        primal_residual=primal,
        dual_residual=dual,
        feasibility_gap=max(0.0, residual - lam),
        rho=rho,
    )
