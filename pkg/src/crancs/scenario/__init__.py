"""Network geometry, statistical channel and sparse uplink signals."""

from crancs.scenario.channel import (
    circular_gaussian,
    generate_channel,
    normalize_large_scale,
    pathloss_amplitude,
    received_signals,
)
from crancs.scenario.geometry import generate_geometry, uniform_disk
from crancs.scenario.signal import generate_signal

__all__ = [
    "generate_geometry",
    "uniform_disk",
    "generate_channel",
    "pathloss_amplitude",
    "normalize_large_scale",
    "circular_gaussian",
    "generate_signal",
    "received_signals",
]
