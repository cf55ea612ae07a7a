"""Seeded random sub-streams.

A master seed plus an integer key (for the harness: sweep index and trial
index) deterministically yields one independent generator per named stream,
so any component can be regenerated without replaying the others.
"""

from dataclasses import dataclass

import numpy as np

STREAM_NAMES: tuple[str, ...] = (
    "geometry",
    "channel",
    "signal",
    "noise",
    "compression",
    "quantizer",
)


def derive_generator(master_seed: int, *key: int) -> np.random.Generator:
    """Generator for an arbitrary spawn key under ``master_seed``."""
    seq = np.random.SeedSequence(entropy=master_seed, spawn_key=tuple(key))
    return np.random.default_rng(seq)


@dataclass(frozen=True)
class RandomStreams:
    """Independent named generators for one realization."""

    geometry: np.random.Generator
    channel: np.random.Generator
    signal: np.random.Generator
    noise: np.random.Generator
    compression: np.random.Generator
    quantizer: np.random.Generator

    @classmethod
    def from_seed(cls, master_seed: int, *key: int) -> "RandomStreams":
        """Derive every named stream from ``(master_seed, *key)``."""
        generators = {
            name: derive_generator(master_seed, *key, index)
            for index, name in enumerate(STREAM_NAMES)
        }
        return cls(**generators)
