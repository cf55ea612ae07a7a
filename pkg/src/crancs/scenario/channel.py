"""Statistical channel: normalised log-distance path loss times Rayleigh fading."""

import numpy as np

from crancs.core.exceptions import DimensionError
from crancs.core.logging import get_logger
from crancs.models.realization import ChannelRealization, ComplexArray, FloatArray, Geometry
from crancs.models.scenario import ScenarioConfig

logger = get_logger(__name__)

REFERENCE_DISTANCE_M = 1.0


def circular_gaussian(shape: tuple[int, ...], rng: np.random.Generator) -> ComplexArray:
    """Standard circular complex Gaussian samples (unit variance)."""
    return np.sqrt(0.5) * (rng.standard_normal(shape) + 1j * rng.standard_normal(shape))


def pathloss_amplitude(distances: FloatArray, exponent: float) -> FloatArray:
    """Log-distance amplitude gain d^(−η/2), unit gain at the 1 m reference."""
    clamped = np.maximum(distances, REFERENCE_DISTANCE_M)
    return np.asarray(clamped ** (-exponent / 2.0), dtype=np.float64)


def normalize_large_scale(raw: FloatArray) -> FloatArray:
    """Rescale each UE's column so that Σ_i g² = M exactly."""
    m = raw.shape[0]
    power = np.sum(raw**2, axis=0, keepdims=True)
    return np.asarray(raw * np.sqrt(m / power), dtype=np.float64)


def generate_channel(
    cfg: ScenarioConfig,
    geometry: Geometry,
    rng: np.random.Generator,
) -> ChannelRealization:
    """Draw one channel realization for a fixed geometry."""
    distances = geometry.distances()
    expected = (cfg.num_rrh, cfg.num_subcarriers, cfg.users_per_carrier)
    if distances.shape != expected:
        raise DimensionError(
            "Geometry does not match the scenario",
            operation="generate_channel",
            details={"geometry": distances.shape, "scenario": expected},
        )

    large = normalize_large_scale(pathloss_amplitude(distances, cfg.pathloss_exponent))
    small = circular_gaussian(expected, rng)
    channel = ChannelRealization(large_scale=large, small_scale=small)

    logger.debug(
        "Generated channel",
        peak_gain=channel.peak_gain,
        normalization_error=channel.normalization_error(),
    )
    return channel


def received_signals(
    channel: ChannelRealization,
    x: ComplexArray,
    rng: np.random.Generator,
    *,
    noise_enabled: bool = True,
) -> tuple[ComplexArray, ComplexArray]:
    """y_i = H_i x + n_i for every RRH.

    Returns ``(y, n)`` with shape ``(M, N_c)``; row ``i`` is the RRH's vector.
    The banded product is evaluated per subcarrier without forming H_i.
    """
    if x.shape != (channel.total_users,):
        raise DimensionError(
            "Signal length does not match K·N_c",
            operation="received_signals",
            details={"x": x.shape, "expected": channel.total_users},
        )
    n_c, k = channel.num_subcarriers, channel.users_per_carrier
    clean = np.einsum("ick,ck->ic", channel.gains, x.reshape(n_c, k))
    shape = (channel.num_rrh, n_c)
    noise = circular_gaussian(shape, rng) if noise_enabled else np.zeros(shape, np.complex128)
    return clean + noise, noise
