"""Data models for the C-RAN simulator."""

from crancs.models.experiment import (
    SCHEMA_VERSION,
    BoundOverlayConfig,
    ExperimentSpec,
    ResultRow,
    Scheme,
    SolverConfig,
    SweepVariable,
)
from crancs.models.realization import ChannelRealization, Geometry, SparseSignal
from crancs.models.recovery import MeasurementSystem, RecoveryResult, SolverStats
from crancs.models.reports import BoundReport, CapacityReport
from crancs.models.scenario import QuantizerConfig, ScenarioConfig

__all__ = [
    # Configuration
    "ScenarioConfig",
    "QuantizerConfig",
    "SolverConfig",
    "BoundOverlayConfig",
    "ExperimentSpec",
    "SweepVariable",
    "Scheme",
    "SCHEMA_VERSION",
    # Realizations
    "Geometry",
    "ChannelRealization",
    "SparseSignal",
    # Recovery
    "MeasurementSystem",
    "RecoveryResult",
    "SolverStats",
    # Reports
    "CapacityReport",
    "BoundReport",
    "ResultRow",
]
