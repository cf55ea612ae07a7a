"""Core utilities for the C-RAN simulator."""

from crancs.core.config import Settings, get_settings
from crancs.core.exceptions import (
    CombinatorialError,
    ConfigurationError,
    CranError,
    DimensionError,
    DomainError,
    ResultIOError,
    SolverError,
    TrialError,
)
from crancs.core.logging import configure_logging, get_logger
from crancs.core.rng import STREAM_NAMES, RandomStreams, derive_generator

__all__ = [
    "Settings",
    "get_settings",
    "CranError",
    "ConfigurationError",
    "DimensionError",
    "DomainError",
    "SolverError",
    "CombinatorialError",
    "ResultIOError",
    "TrialError",
    "configure_logging",
    "get_logger",
    "RandomStreams",
    "STREAM_NAMES",
    "derive_generator",
]
