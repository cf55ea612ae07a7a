"""Uniform mid-rise fronthaul quantizer.

Real and imaginary parts are quantized separately with b/2 bits each. The
dynamic range of a vector is ±4·RMS of its parts; the scale is treated as
lossless side information.
"""

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from crancs.core.exceptions import ConfigurationError
from crancs.models.realization import ComplexArray, FloatArray
from crancs.models.scenario import QuantizerConfig

RANGE_FACTOR = 4.0


def dynamic_range(z: ComplexArray) -> float:
    """Clipping level 4·RMS over the real and imaginary parts of ``z``."""
    if z.size == 0:
        return 0.0
    parts = np.concatenate((z.real, z.imag))
    return RANGE_FACTOR * float(np.sqrt(np.mean(parts**2)))


def _quantize_parts(v: FloatArray, step: float, levels: int) -> FloatArray:
    half = levels // 2
    index = np.clip(np.floor(v / step), -half, half - 1)
    return np.asarray(step * (index + 0.5), dtype=np.float64)


def quantize(
    z: ComplexArray,
    qcfg: QuantizerConfig,
    rng: np.random.Generator | None = None,
    *,
    scale: float | None = None,
) -> tuple[ComplexArray, float]:
    """Quantize one vector; returns ``(ẑ, ‖ẑ − z‖)``.

    ``scale`` fixes the dynamic range instead of deriving it from ``z``.
    """
    if not qcfg.enabled or qcfg.bits_per_dimension == 0:
        return z.copy(), 0.0

    full_range = dynamic_range(z) if scale is None else float(scale)
    if full_range <= 0.0:
        return z.copy(), 0.0

    levels = 2**qcfg.bits_per_part
    step = 2.0 * full_range / levels

    re, im = z.real.copy(), z.imag.copy()
    if qcfg.dither:
        if rng is None:
            raise ConfigurationError("Dithered quantization needs the quantizer stream")
        d_re = rng.uniform(-step / 2.0, step / 2.0, size=z.shape)
        d_im = rng.uniform(-step / 2.0, step / 2.0, size=z.shape)
        q_re = _quantize_parts(re + d_re, step, levels) - d_re
        q_im = _quantize_parts(im + d_im, step, levels) - d_im
    else:
        q_re = _quantize_parts(re, step, levels)
        q_im = _quantize_parts(im, step, levels)

    z_hat = (q_re + 1j * q_im).astype(np.complex128)
    return z_hat, float(np.linalg.norm(z_hat - z))


def quantize_fronthaul(
    blocks: Sequence[ComplexArray],
    qcfg: QuantizerConfig,
    rng: np.random.Generator | None = None,
) -> tuple[ComplexArray, ComplexArray]:
    """Quantize each RRH's z_i with its own scale.

    Returns the stacked ẑ and the stacked error n̂ = ẑ − z.
    """
    quantized = [quantize(z_i, qcfg, rng)[0] for z_i in blocks]
    z_hat = np.concatenate(quantized) if quantized else np.zeros(0, np.complex128)
    z = np.concatenate(list(blocks)) if blocks else np.zeros(0, np.complex128)
    return z_hat, z_hat - z


@dataclass(frozen=True)
class DistortionCurve:
    """Mean relative quantization error per bit budget and its log2 slope."""

    bits: tuple[int, ...]
    mean_relative_error: tuple[float, ...]
    slope: float


def measure_distortion(
    bits: Sequence[int],
    rng: np.random.Generator,
    *,
    n_vectors: int = 200,
    length: int = 64,
) -> DistortionCurve:
    """Empirical relative error ‖ẑ − z‖/‖z‖ over Gaussian vectors.

    The same corpus is reused for every b; ``slope`` is the least-squares fit of
    log2(error) against b and sits near −1/2 for this quantizer.
    """
    corpus = np.sqrt(0.5) * (
        rng.standard_normal((n_vectors, length)) + 1j * rng.standard_normal((n_vectors, length))
    )
    errors: list[float] = []
    for b in bits:
        qcfg = QuantizerConfig(bits_per_dimension=b, enabled=b > 0)
        rel = [quantize(z, qcfg)[1] / float(np.linalg.norm(z)) for z in corpus]
        errors.append(float(np.mean(rel)))

    if len(bits) >= 2:
        slope = float(np.polyfit(np.asarray(bits, float), np.log2(errors), 1)[0])
    else:
        slope = float("nan")
    return DistortionCurve(bits=tuple(bits), mean_relative_error=tuple(errors), slope=slope)
