"""Per-RRH random-phase compression and fronthaul quantization."""

from crancs.compression.matrices import compress, generate_compression_matrices
from crancs.compression.quantizer import (
    DistortionCurve,
    dynamic_range,
    measure_distortion,
    quantize,
    quantize_fronthaul,
)

__all__ = [
    "generate_compression_matrices",
    "compress",
    "quantize",
    "quantize_fronthaul",
    "dynamic_range",
    "measure_distortion",
    "DistortionCurve",
]
