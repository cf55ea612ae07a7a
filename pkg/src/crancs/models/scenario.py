"""Scenario and quantizer configuration models."""

import math
from typing import Any, Literal, Self

from pydantic import BaseModel, Field, model_validator


class QuantizerConfig(BaseModel):
    """Fronthaul scalar quantizer settings."""

    bits_per_dimension: int = Field(
        default=0, ge=0, le=64, description="Bits per complex dimension (b/2 per real part)"
    )
    enabled: bool = Field(default=False, description="Quantize z on the fronthaul")
    dither: bool = Field(default=False, description="Subtractive dither from the quantizer stream")

    @model_validator(mode="after")
    def _check_bits(self) -> Self:
        if self.enabled and (self.bits_per_dimension < 2 or self.bits_per_dimension % 2):
            raise ValueError(
                "bits_per_dimension must be a positive even integer when quantization is enabled"
            )
        return self

    @property
    def bits_per_part(self) -> int:
        """Bits spent on each of the real and imaginary parts."""
        return self.bits_per_dimension // 2


LambdaRule = Literal["sqrt_2nc", "high_snr", "fixed"]


class ScenarioConfig(BaseModel):
    """All parameters of one simulated uplink C-RAN scenario."""

    num_rrh: int = Field(..., ge=1, description="M, number of single-antenna RRHs")
    users_per_carrier: int = Field(..., ge=1, description="K, UEs sharing each subcarrier")
    num_subcarriers: int = Field(..., ge=1, description="N_c, number of subcarriers")
    num_active: int = Field(..., ge=0, description="s, number of active UEs")
    transmit_snr: float = Field(..., gt=0.0, description="P, noise-normalised linear power")
    num_measurements: int | None = Field(
        default=None, ge=1, description="R, measurements per RRH (defaults to N_c)"
    )
    cell_radius: float = Field(default=2000.0, ge=0.0, description="Disk radius in meters")
    pathloss_exponent: float = Field(default=2.5, gt=0.0)
    master_seed: int = Field(default=0, ge=0, lt=2**64)
    noise_enabled: bool = True
    quantizer: QuantizerConfig = Field(default_factory=QuantizerConfig)
    lambda_rule: LambdaRule = "sqrt_2nc"
    bp_threshold: float | None = Field(default=None, ge=0.0, description="Explicit λ")
    lambda_delta: float | None = Field(
        default=None, ge=0.0, description="RIC δ used by the high-SNR λ rule"
    )
    mmse_prior_fraction: float = Field(
        default=1.0, gt=0.0, le=1.0, description="Joint MMSE assumes prior power p·P"
    )

    @model_validator(mode="before")
    @classmethod
    def _lift_flat_keys(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = dict(data)
        if "transmit_snr_db" in data:
            if "transmit_snr" in data:
                raise ValueError("give either transmit_snr or transmit_snr_db, not both")
            data["transmit_snr"] = 10.0 ** (float(data.pop("transmit_snr_db")) / 10.0)
        flat = {
            key: data.pop(key)
            for key in ("quantization_bits", "quantization_dither")
            if key in data
        }
        if flat:
            quantizer = dict(data.get("quantizer") or {})
            if "quantization_bits" in flat:
                bits = int(flat["quantization_bits"])
                quantizer["bits_per_dimension"] = bits
                quantizer.setdefault("enabled", bits > 0)
            if "quantization_dither" in flat:
                quantizer["dither"] = bool(flat["quantization_dither"])
            data["quantizer"] = quantizer
        return data

    @model_validator(mode="after")
    def _check_dimensions(self) -> Self:
        if self.num_active > self.total_users:
            raise ValueError(
                f"num_active={self.num_active} exceeds K*N_c={self.total_users}"
            )
        if self.measurements > self.num_subcarriers:
            raise ValueError(
                f"num_measurements={self.measurements} exceeds N_c={self.num_subcarriers}"
            )
        if self.lambda_rule == "fixed" and self.bp_threshold is None:
            raise ValueError("lambda_rule 'fixed' requires bp_threshold")
        if self.lambda_rule == "high_snr" and self.lambda_delta is None:
            raise ValueError("lambda_rule 'high_snr' requires lambda_delta")
        return self

    @property
    def total_users(self) -> int:
        """K·N_c, length of the stacked signal vector."""
        return self.users_per_carrier * self.num_subcarriers

    @property
    def measurements(self) -> int:
        """R, resolved against its N_c default."""
        return self.num_measurements if self.num_measurements is not None else self.num_subcarriers

    @property
    def measurement_count(self) -> int:
        """M·R, rows of the aggregate measurement matrix."""
        return self.num_rrh * self.measurements

    @property
    def compression_rate(self) -> float:
        """α = R / N_c."""
        return self.measurements / self.num_subcarriers

    @property
    def transmit_snr_db(self) -> float:
        """P in dB."""
        return 10.0 * math.log10(self.transmit_snr)
