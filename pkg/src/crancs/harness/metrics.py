"""Aggregation metrics over the trials of one (sweep value, scheme) cell."""

import math
from abc import ABC, abstractmethod
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

import numpy as np

from crancs.analysis.montecarlo import student_t_halfwidth, wilson_interval
from crancs.harness.trial import TrialOutcome
from crancs.models.experiment import Scheme


@dataclass
class MetricResult:
    """Result of computing a metric."""

    name: str
    value: float
    details: dict[str, Any]


class Metric(ABC):
    """Abstract base class for aggregation metrics."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Metric name."""
        ...

    @abstractmethod
    def compute(self, trials: Sequence[TrialOutcome], scheme: Scheme) -> MetricResult:
        """Aggregate one scheme over a list of trials."""
        ...


class ThroughputMetric(Metric):
    """Mean per-active-user throughput with its Student-t half-width."""

    def __init__(self, confidence: float = 0.95) -> None:
        self.confidence = confidence

    @property
    def name(self) -> str:
        return "mean_tput"

    def compute(self, trials: Sequence[TrialOutcome], scheme: Scheme) -> MetricResult:
        values = [t.throughput(scheme) for t in trials]
        finite = [v for v in values if not math.isnan(v)]
        if not finite:
            return MetricResult(name=self.name, value=math.nan, details={"ci": math.nan, "n": 0})
        return MetricResult(
            name=self.name,
            value=float(np.mean(finite)),
            details={
                "ci": student_t_halfwidth(finite, self.confidence),
                "n": len(finite),
                "std_error": float(np.std(finite, ddof=1) / math.sqrt(len(finite)))
                if len(finite) > 1
                else 0.0,
            },
        )


class DetectionRateMetric(Metric):
    """Fraction of valid trials with T̂ = T, plus a Wilson interval.

    Trials with s = 0 are counted under ``degenerate`` and stay out of the
    rate; a cell made only of them reports NaN.
    """

    def __init__(self, confidence: float = 0.95) -> None:
        self.confidence = confidence

    @property
    def name(self) -> str:
        return "detection_rate"

    def compute(self, trials: Sequence[TrialOutcome], scheme: Scheme) -> MetricResult:
        valid = [t for t in trials if t.outcomes[scheme].valid]
        degenerate = [t for t in valid if t.num_active == 0]
        counted = [t.outcomes[scheme] for t in valid if t.num_active > 0]
        degenerate_correct = sum(1 for t in degenerate if t.outcomes[scheme].detection_correct)
        if not counted:
            return MetricResult(
                name=self.name,
                value=math.nan,
                details={
                    "valid": 0,
                    "degenerate": len(degenerate),
                    "degenerate_correct": degenerate_correct,
                },
            )
        correct = sum(1 for o in counted if o.detection_correct)
        low, high = wilson_interval(correct, len(counted), self.confidence)
        return MetricResult(
            name=self.name,
            value=correct / len(counted),
            details={
                "correct": correct,
                "valid": len(counted),
                "low": low,
                "high": high,
                "degenerate": len(degenerate),
                "degenerate_correct": degenerate_correct,
            },
        )


class InvalidTrialsMetric(Metric):
    """Count of trials the scheme could not complete."""

    @property
    def name(self) -> str:
        return "invalid"

    def compute(self, trials: Sequence[TrialOutcome], scheme: Scheme) -> MetricResult:
        errors = [t.outcomes[scheme].error for t in trials if not t.outcomes[scheme].valid]
        return MetricResult(
            name=self.name,
            value=float(len(errors)),
            details={"errors": sorted({e for e in errors if e})},
        )


class WallTimeMetric(Metric):
    """Mean per-trial wall time in milliseconds."""

    @property
    def name(self) -> str:
        return "wall_ms"

    def compute(self, trials: Sequence[TrialOutcome], scheme: Scheme) -> MetricResult:
        times = [t.outcomes[scheme].wall_time_ms for t in trials]
        if not times:
            return MetricResult(name=self.name, value=0.0, details={})
        return MetricResult(
            name=self.name,
            value=float(np.mean(times)),
            details={"max_ms": float(np.max(times)), "total_ms": float(np.sum(times))},
        )
