"""Random-phase compression matrices and per-RRH compression."""

import numpy as np

from crancs.core.exceptions import ConfigurationError, DimensionError
from crancs.models.realization import ComplexArray


def generate_compression_matrices(
    num_rrh: int,
    num_measurements: int,
    num_subcarriers: int,
    rng: np.random.Generator,
) -> tuple[ComplexArray, ...]:
    """Draw A_1..A_M with entries √(1/(M·R))·exp(jθ), θ ~ U[0, 2π).

    The position in the returned tuple is the RRH index.
    """
    if not 1 <= num_measurements <= num_subcarriers:
        raise ConfigurationError(
            "Compression needs 1 <= R <= N_c",
            details={"num_measurements": num_measurements, "num_subcarriers": num_subcarriers},
        )
    if num_rrh < 1:
        raise ConfigurationError("At least one RRH is required", details={"num_rrh": num_rrh})

    magnitude = np.sqrt(1.0 / (num_rrh * num_measurements))
    phases = rng.uniform(0.0, 2.0 * np.pi, size=(num_rrh, num_measurements, num_subcarriers))
    matrices = magnitude * np.exp(1j * phases)
    return tuple(np.ascontiguousarray(a) for a in matrices)


def compress(a: ComplexArray, y: ComplexArray) -> ComplexArray:
    """z_i = A_i y_i."""
    if a.ndim != 2 or y.shape != (a.shape[1],):
        raise DimensionError(
            "Compression matrix and received vector disagree",
            operation="compress",
            details={"matrix": a.shape, "vector": y.shape},
        )
    return np.asarray(a @ y, dtype=np.complex128)
