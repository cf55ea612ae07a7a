"""Sparse uplink transmit signal."""

import numpy as np

from crancs.core.exceptions import ConfigurationError
from crancs.models.realization import SparseSignal
from crancs.models.scenario import ScenarioConfig
from crancs.scenario.channel import circular_gaussian


def generate_signal(cfg: ScenarioConfig, rng: np.random.Generator) -> SparseSignal:
    """Pick s active UEs uniformly and draw their symbols CN(0, P)."""
    n, s = cfg.total_users, cfg.num_active
    if s > n:
        raise ConfigurationError(
            "More active users than UEs",
            details={"num_active": s, "total_users": n},
        )

    support = np.sort(rng.choice(n, size=s, replace=False)).astype(np.intp)
    powers = np.full(s, cfg.transmit_snr, dtype=np.float64)
    x = np.zeros(n, dtype=np.complex128)
    x[support] = np.sqrt(powers) * circular_gaussian((s,), rng)
    return SparseSignal(x=x, support=support, powers=powers)
