"""Aggregate measurement system assembled at the BBU pool."""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from crancs.compression.matrices import compress, generate_compression_matrices
from crancs.compression.quantizer import quantize_fronthaul
from crancs.core.exceptions import DimensionError
from crancs.core.rng import RandomStreams
from crancs.models.realization import ChannelRealization, ComplexArray, SparseSignal
from crancs.models.recovery import MeasurementSystem
from crancs.models.scenario import QuantizerConfig, ScenarioConfig
from crancs.scenario.channel import generate_channel, received_signals
from crancs.scenario.geometry import generate_geometry
from crancs.scenario.signal import generate_signal


def assemble_theta(
    channel: ChannelRealization,
    compression: Sequence[ComplexArray],
) -> ComplexArray:
    """Θ with row block i equal to A_i·H_i.

    Entry (i·R + r, c·K + k) is A_i[r, c]·H[i, c, k]; the banded H_i is never
    materialised.
    """
    a = np.asarray(compression, dtype=np.complex128)
    h = channel.gains
    if a.ndim != 3 or a.shape[0] != h.shape[0] or a.shape[2] != h.shape[1]:
        raise DimensionError(
            "Compression matrices do not match the channel",
            operation="assemble_theta",
            details={"compression": a.shape, "channel": h.shape},
        )
    m, r, n_c = a.shape
    k = h.shape[2]
    return np.asarray(
        (a[:, :, :, None] * h[:, None, :, :]).reshape(m * r, n_c * k),
        dtype=np.complex128,
    )


def build_measurement_system(
    channel: ChannelRealization,
    received: ComplexArray,
    noise: ComplexArray,
    compression: Sequence[ComplexArray],
    lam: float,
    quantizer: QuantizerConfig | None = None,
    rng: np.random.Generator | None = None,
) -> MeasurementSystem:
    """Run the distributed compression end to end.

    Every RRH compresses its own y_i (rows of ``received``), optionally
    quantizes z_i, and the BBU stacks the results next to Θ.
    """
    if received.shape[0] != len(compression) or noise.shape != received.shape:
        raise DimensionError(
            "One received vector and one compression matrix per RRH are required",
            operation="build_measurement_system",
            details={"received": received.shape, "matrices": len(compression)},
        )

    blocks = [compress(a_i, y_i) for a_i, y_i in zip(compression, received, strict=True)]
    aggregate_noise = np.concatenate(
        [compress(a_i, n_i) for a_i, n_i in zip(compression, noise, strict=True)]
    )

    if quantizer is not None and quantizer.enabled:
        z, quantization_error = quantize_fronthaul(blocks, quantizer, rng)
    else:
        z = np.concatenate(blocks)
        quantization_error = np.zeros_like(z)

    return MeasurementSystem(
        theta=assemble_theta(channel, compression),
        z=z,
        compression=tuple(compression),
        noise=aggregate_noise,
        quantization_error=quantization_error,
        lam=float(lam),
    )


@dataclass(frozen=True)
class Realization:
    """Everything drawn for one trial, shared by all receivers."""

    channel: ChannelRealization
    signal: SparseSignal
    received: ComplexArray
    thermal_noise: ComplexArray
    system: MeasurementSystem


def draw_realization(cfg: ScenarioConfig, streams: RandomStreams, lam: float) -> Realization:
    """Geometry, channel, signal, noise and compression from the named streams."""
    geometry = generate_geometry(cfg, streams.geometry)
    channel = generate_channel(cfg, geometry, streams.channel)
    signal = generate_signal(cfg, streams.signal)
    received, noise = received_signals(
        channel, signal.x, streams.noise, noise_enabled=cfg.noise_enabled
    )
    compression = generate_compression_matrices(
        cfg.num_rrh, cfg.measurements, cfg.num_subcarriers, streams.compression
    )
    system = build_measurement_system(
        channel, received, noise, compression, lam, cfg.quantizer, streams.quantizer
    )
    return Realization(
        channel=channel,
        signal=signal,
        received=received,
        thermal_noise=noise,
        system=system,
    )
