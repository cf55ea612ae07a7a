"""Network geometry: RRHs and UEs dropped uniformly over the cell disk."""

import numpy as np

from crancs.models.realization import FloatArray, Geometry
from crancs.models.scenario import ScenarioConfig


def uniform_disk(count: int, radius: float, rng: np.random.Generator) -> FloatArray:
    """``count`` points uniform over the disk area, shape ``(count, 2)``."""
    # sqrt of a uniform variate gives area-uniform radii
    r = radius * np.sqrt(rng.random(count))
    phi = 2.0 * np.pi * rng.random(count)
    return np.column_stack((r * np.cos(phi), r * np.sin(phi)))


def generate_geometry(cfg: ScenarioConfig, rng: np.random.Generator) -> Geometry:
    """Drop M RRHs and K·N_c UEs uniformly in the disk of ``cfg.cell_radius``."""
    rrh = uniform_disk(cfg.num_rrh, cfg.cell_radius, rng)
    ues = uniform_disk(cfg.total_users, cfg.cell_radius, rng)
    return Geometry(
        rrh_positions=rrh,
        ue_positions=ues.reshape(cfg.num_subcarriers, cfg.users_per_carrier, 2),
        cell_radius=cfg.cell_radius,
    )
