"""Per-trial invariant checks and their registry."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field

import numpy as np

from crancs.models.experiment import Scheme
from crancs.models.recovery import RecoveryResult
from crancs.models.reports import CapacityReport
from crancs.recovery.basis_pursuit import FEASIBILITY_SLACK
from crancs.recovery.linalg import smallest_singular_value
from crancs.recovery.system import Realization

IDENTITY_TOL = 1e-8
NORMALIZATION_TOL = 1e-9
ERROR_BOUND_SLACK = 1e-9


@dataclass(frozen=True)
class CheckViolation:
    """One failed invariant on one trial."""

    check: str
    message: str
    scheme: str | None = None
    value: float | None = None
    limit: float | None = None


@dataclass
class TrialContext:
    """What the checks can look at after every scheme has run."""

    realization: Realization
    results: dict[Scheme, RecoveryResult] = field(default_factory=dict)
    capacities: dict[Scheme, CapacityReport] = field(default_factory=dict)


class TrialCheck(ABC):
    """Abstract base class for per-trial checks."""

    def __init__(self, name: str, description: str) -> None:
        self.name = name
        self.description = description

    @abstractmethod
    def check(self, context: TrialContext) -> list[CheckViolation]:
        """Return the violations found on this trial."""
        ...


class CheckRegistry:
    """Process-wide registry of trial checks."""

    _instance: "CheckRegistry | None" = None
    _checks: list[TrialCheck]

    def __new__(cls) -> "CheckRegistry":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._checks = []
        return cls._instance

    def register(self, check: TrialCheck) -> None:
        if any(c.name == check.name for c in self._checks):
            return
        self._checks.append(check)

    def run_all(self, context: TrialContext) -> list[CheckViolation]:
        violations: list[CheckViolation] = []
        for check in self._checks:
            violations.extend(check.check(context))
        return violations

    def clear(self) -> None:
        """Clear all registered checks (for testing)."""
        self._checks = []

    @property
    def all_checks(self) -> list[TrialCheck]:
        return self._checks.copy()


def register_check(check: TrialCheck) -> TrialCheck:
    """Register a check with the global registry."""
    CheckRegistry().register(check)
    return check


class BpFeasibilityCheck(TrialCheck):
    """The rough estimate stays inside the residual ball."""

    def __init__(self) -> None:
        super().__init__("bp_feasibility", "‖Θx̂ − z‖ ≤ λ(1 + 1e-6)")

    def check(self, context: TrialContext) -> list[CheckViolation]:
        result = context.results.get(Scheme.PROPOSED)
        if result is None or result.x_rough is None:
            return []
        system = context.realization.system
        residual = float(np.linalg.norm(system.theta @ result.x_rough - system.z))
        limit = system.lam * (1.0 + FEASIBILITY_SLACK)
        if residual <= limit:
            return []
        return [
            CheckViolation(
                check=self.name,
                message="basis pursuit estimate outside the residual ball",
                scheme=Scheme.PROPOSED.value,
                value=residual,
                limit=limit,
            )
        ]


class ErrorBoundCheck(TrialCheck):
    """With T̂ = T, ‖x_final − x‖ ≤ ‖ẑ − Θx‖ / σ_min(Θ_T)."""

    def __init__(self) -> None:
        super().__init__("zf_error_bound", "ZF error bounded by total noise over σ_min")

    def check(self, context: TrialContext) -> list[CheckViolation]:
        realization = context.realization
        system = realization.system
        signal = realization.signal
        if signal.sparsity == 0:
            return []
        sigma = smallest_singular_value(system.theta[:, signal.support])
        if sigma <= 0.0:
            return []
        total_noise = float(np.linalg.norm(system.z - system.theta @ signal.x))
        limit = total_noise / sigma * (1.0 + ERROR_BOUND_SLACK) + 1e-12

        violations = []
        for scheme in (Scheme.PROPOSED, Scheme.OMP_ZF, Scheme.GENIE_ZF):
            result = context.results.get(scheme)
            if result is None or not result.detection_correct:
                continue
            error = float(np.linalg.norm(result.x_final - signal.x))
            if error > limit:
                violations.append(
                    CheckViolation(
                        check=self.name,
                        message="zero-forcing error exceeds noise / smallest singular value",
                        scheme=scheme.value,
                        value=error,
                        limit=limit,
                    )
                )
        return violations


class CapacityIdentityCheck(TrialCheck):
    """Both interference-plus-noise forms agree when T̂ = T."""

    def __init__(self) -> None:
        super().__init__("psi_identity", "general and reduced Ψ agree to 1e-8")

    def check(self, context: TrialContext) -> list[CheckViolation]:
        violations = []
        for scheme, report in context.capacities.items():
            gap = report.identity_gap
            if gap is not None and gap > IDENTITY_TOL:
                violations.append(
                    CheckViolation(
                        check=self.name,
                        message="Ψ forms disagree on the true support",
                        scheme=scheme.value,
                        value=gap,
                        limit=IDENTITY_TOL,
                    )
                )
        return violations


class ChannelNormalizationCheck(TrialCheck):
    """Σ_i g² = M for every UE."""

    def __init__(self) -> None:
        super().__init__("channel_normalization", "large-scale gains normalised to M")

    def check(self, context: TrialContext) -> list[CheckViolation]:
        error = context.realization.channel.normalization_error()
        if error <= NORMALIZATION_TOL:
            return []
        return [
            CheckViolation(
                check=self.name,
                message="large-scale normalisation drifted",
                value=error,
                limit=NORMALIZATION_TOL,
            )
        ]


def register_default_checks() -> None:
    """Register all default trial checks."""
    registry = CheckRegistry()
    registry.register(BpFeasibilityCheck())
    registry.register(ErrorBoundCheck())
    registry.register(CapacityIdentityCheck())
    registry.register(ChannelNormalizationCheck())


# Auto-register default checks on module import
register_default_checks()
