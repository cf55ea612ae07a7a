"""Experiment specification and result models."""

import math
from enum import StrEnum
from typing import Any, Self

from pydantic import BaseModel, Field, ValidationError, model_validator

from crancs.models.scenario import ScenarioConfig

SCHEMA_VERSION = 1


class SweepVariable(StrEnum):
    """Quantity varied along the x-axis of an experiment."""

    FRONTHAUL_BITS = "fronthaul_bits"
    TRANSMIT_SNR = "transmit_snr"
    NUM_ACTIVE = "num_active"
    COMPRESSION_RATE = "compression_rate"


class Scheme(StrEnum):
    """Receivers compared in the experiments."""

    PROPOSED = "proposed"
    MMSE_JOINT = "mmse_joint"
    MMSE_SEPARATE = "mmse_separate"
    OMP_ZF = "omp_zf"
    GENIE_ZF = "genie_zf"


class SolverConfig(BaseModel):
    """Basis pursuit solver tolerances."""

    max_iter: int = Field(default=20000, ge=1)
    tolerance: float = Field(default=1e-6, gt=0.0, description="Relative primal/dual tolerance")
    rho: float = Field(default=1.0, gt=0.0, description="Initial ADMM penalty")
    adaptive_rho: bool = True


class BoundOverlayConfig(BaseModel):
    """Theory curves written next to the simulated ones."""

    theorem4: bool = False
    corollary1: bool = False
    delta: float = Field(default=0.2, ge=0.0, lt=math.sqrt(2.0) - 1.0)
    pr_rip: float = Field(default=1.0, ge=0.0, le=1.0)


class ExperimentSpec(BaseModel):
    """One Monte Carlo sweep over a single scenario variable."""

    schema_version: int = Field(default=SCHEMA_VERSION)
    name: str = "experiment"
    base: ScenarioConfig
    sweep_variable: SweepVariable
    sweep_values: list[float] = Field(..., min_length=1)
    n_trials: int = Field(..., ge=1)
    schemes: list[Scheme] = Field(default_factory=lambda: list(Scheme), min_length=1)
    solver: SolverConfig = Field(default_factory=SolverConfig)
    bound_overlays: BoundOverlayConfig = Field(default_factory=BoundOverlayConfig)

    @model_validator(mode="after")
    def _check_sweep(self) -> Self:
        if self.schema_version != SCHEMA_VERSION:
            raise ValueError(
                f"unsupported schema_version {self.schema_version} (expected {SCHEMA_VERSION})"
            )
        if self.sweep_values != sorted(self.sweep_values):
            raise ValueError("sweep_values must be sorted ascending")
        if len(set(self.schemes)) != len(self.schemes):
            raise ValueError("schemes must not repeat")
        if self.sweep_variable == SweepVariable.FRONTHAUL_BITS and not self.base.quantizer.enabled:
            raise ValueError("a fronthaul_bits sweep needs quantization enabled in the scenario")
        for value in self.sweep_values:
            try:
                self.scenario_for(value)
            except ValidationError as e:
                raise ValueError(f"sweep value {value} gives an invalid scenario: {e}") from e
        return self

    def scenario_for(self, value: float) -> ScenarioConfig:
        """Scenario at one sweep point.

        ``transmit_snr`` values are in dB. ``fronthaul_bits`` values are the
        per-link budget B = R·b at the scenario's fixed b.
        """
        updates: dict[str, Any]
        match self.sweep_variable:
            case SweepVariable.FRONTHAUL_BITS:
                bits = self.base.quantizer.bits_per_dimension
                updates = {"num_measurements": int(value) // bits}
            case SweepVariable.TRANSMIT_SNR:
                updates = {"transmit_snr": 10.0 ** (value / 10.0)}
            case SweepVariable.NUM_ACTIVE:
                updates = {"num_active": int(value)}
            case SweepVariable.COMPRESSION_RATE:
                updates = {
                    "num_measurements": max(1, round(value * self.base.num_subcarriers))
                }
        return ScenarioConfig.model_validate(self.base.model_dump() | updates)


class ResultRow(BaseModel):
    """Aggregated outcome of one (sweep value, scheme) cell."""

    sweep_value: float
    scheme: Scheme
    mean_per_active_user_throughput: float
    ci_halfwidth: float
    detection_rate: float = Field(..., description="NaN when no trial was valid")
    invalid_trials: int = Field(..., ge=0)
    wall_time_ms: float = Field(..., ge=0.0)
    valid_trials: int = Field(default=0, ge=0)
    num_measurements: int | None = None
    bits_per_dimension: int | None = None

    @model_validator(mode="after")
    def _check_rate(self) -> Self:
        if not math.isnan(self.detection_rate) and not 0.0 <= self.detection_rate <= 1.0:
            raise ValueError(f"detection_rate {self.detection_rate} outside [0, 1]")
        return self
