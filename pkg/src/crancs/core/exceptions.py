"""Custom exceptions for the C-RAN simulator."""

from typing import Any


class CranError(Exception):
    """Base exception for all simulator errors."""

    def __init__(self, message: str, details: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        if self.details:
            return f"{self.message} - Details: {self.details}"
        return self.message


class ConfigurationError(CranError):
    """Raised when a scenario or experiment configuration is invalid."""

    pass


class DimensionError(CranError):
    """Raised when array shapes do not agree."""

    def __init__(
        self,
        message: str,
        operation: str,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message, details)
        self.operation = operation


class DomainError(CranError):
    """Raised when a bound formula is evaluated outside its hypothesis."""

    def __init__(
        self,
        message: str,
        parameter: str,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message, details)
        self.parameter = parameter


class SolverError(CranError):
    """Raised when basis pursuit fails to converge or the ball is infeasible."""

    def __init__(
        self,
        message: str,
        iterations: int = 0,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message, details)
        self.iterations = iterations


class CombinatorialError(CranError):
    """Raised when an exhaustive search over supports would be too large."""

    pass


class ResultIOError(CranError):
    """Raised when result files cannot be written or read."""

    pass


class TrialError(CranError):
    """Raised when a single Monte Carlo trial fails."""

    def __init__(
        self,
        message: str,
        trial_index: int | None = None,
        scheme: str | None = None,
        details: dict[str, Any] | None = None,
    ) -> None:
        super().__init__(message, details)
        self.trial_index = trial_index
        self.scheme = scheme
