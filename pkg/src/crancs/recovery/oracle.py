"""Reference basis pursuit solve with cvxpy on the real embedding.

Only meant for small instances; requires the ``oracle`` extra.
"""

from typing import Any

import numpy as np

from crancs.core.exceptions import SolverError
from crancs.models.realization import ComplexArray


def solve_basis_pursuit_reference(
    theta: ComplexArray,
    z: ComplexArray,
    lam: float,
    solver: str | None = None,
) -> tuple[ComplexArray, float]:
    """Solve the second-order cone program; returns ``(x, ‖x‖₁)``.

    The complex ℓ1 norm becomes a sum of 2-norms over (Re x_j, Im x_j) pairs.
    """
    import cvxpy as cp

    n = theta.shape[1]
    x_re = cp.Variable(n)
    x_im = cp.Variable(n)
    t_re, t_im = theta.real, theta.imag

    residual = cp.hstack(
        [
            t_re @ x_re - t_im @ x_im - z.real,
            t_im @ x_re + t_re @ x_im - z.imag,
        ]
    )
    objective = cp.sum(cp.norm(cp.vstack([x_re, x_im]), 2, axis=0))
    problem = cp.Problem(cp.Minimize(objective), [cp.norm(residual, 2) <= lam])

    kwargs: dict[str, Any] = {}
    if solver is not None:
        kwargs["solver"] = solver
    problem.solve(**kwargs)

    if problem.status not in (cp.OPTIMAL, cp.OPTIMAL_INACCURATE) or x_re.value is None:
        raise SolverError("Reference solve failed", details={"status": problem.status})

    x = np.asarray(x_re.value + 1j * x_im.value, dtype=np.complex128)
    return x, float(problem.value)
