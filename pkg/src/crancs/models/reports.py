"""Reports produced by the analysis layer."""

import math

from pydantic import BaseModel, Field


class CapacityReport(BaseModel):
    """Sum capacity of a linear receiver on one realization."""

    r_sum: float = Field(..., description="Σ log(1 + P_l/α_l) in the chosen base")
    log_base: float = 2.0
    per_stream: list[tuple[float, float]] = Field(
        default_factory=list, description="(P_l, α_l) per detected stream"
    )
    psi_diag: list[float] = Field(default_factory=list)
    dropped_streams: list[int] = Field(
        default_factory=list, description="Stream indices whose α_l was undefined"
    )
    rank_deficient: bool = False
    identity_gap: float | None = Field(
        default=None, description="Relative Frobenius gap between both Ψ forms when T̂ = T"
    )

    @property
    def unit(self) -> str:
        if self.log_base == 2.0:
            return "bits"
        if math.isclose(self.log_base, math.e):
            return "nats"
        return f"log{self.log_base:g}"


class BoundReport(BaseModel):
    """Closed-form bound values for one parameter set."""

    c1: float | None = None
    c2: float | None = None
    lemma1_bound: float | None = None
    lemma2_bound: float | None = None
    thm2_lower_raw: float | None = None
    thm2_lower_clipped: float | None = Field(default=None, ge=0.0, le=1.0)
    thm4_upper: float | None = None
    thm4_lower: float | None = None
    corollary1_lower: float | None = None
    ric_estimate: float | None = Field(default=None, ge=0.0)
    rip_order: int | None = None
    log_base: float = 2.0
