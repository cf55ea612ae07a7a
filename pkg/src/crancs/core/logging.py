"""structlog setup for the simulator.

Log lines go to stderr so that ``--json`` command output on stdout stays
machine-readable. Numerical fields are converted to plain Python before
rendering.
"""

import logging
import sys
from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any

import numpy as np
import structlog
from structlog.types import EventDict, Processor, WrappedLogger

from crancs.core.config import Settings

# Arrays longer than this are summarised by shape in log events.
MAX_LOGGED_ELEMENTS = 8


def _to_builtin(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        if value.size <= MAX_LOGGED_ELEMENTS:
            return value.tolist()
        return f"<ndarray shape={value.shape} dtype={value.dtype}>"
    if isinstance(value, complex):
        return f"{value.real:.6g}{value.imag:+.6g}j"
    return value


def numpy_to_builtin(_: WrappedLogger, __: str, event_dict: EventDict) -> EventDict:
    """structlog processor: numpy scalars, small arrays and complex values to JSON-safe types."""
    return {key: _to_builtin(value) for key, value in event_dict.items()}


def configure_logging(settings: Settings | None = None) -> None:
    """Route structlog to stderr at the configured level and renderer."""
    if settings is None:
        from crancs.core.config import get_settings

        settings = get_settings()

    level = getattr(logging, settings.log_level)
    logging.basicConfig(format="%(message)s", stream=sys.stderr, level=level)

    processors: list[Processor] = [
        structlog.contextvars.merge_contextvars,
        structlog.processors.add_log_level,
        structlog.processors.TimeStamper(fmt="iso"),
        numpy_to_builtin,
    ]
    if settings.log_format == "json":
        processors += [structlog.processors.format_exc_info, structlog.processors.JSONRenderer()]
    else:
        processors.append(structlog.dev.ConsoleRenderer(colors=sys.stderr.isatty()))

    structlog.configure(
        processors=processors,
        wrapper_class=structlog.make_filtering_bound_logger(level),
        context_class=dict,
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


def get_logger(name: str | None = None, **initial_context: Any) -> structlog.BoundLogger:
    """Get a logger instance with optional initial context."""
    logger = structlog.get_logger(name)
    if initial_context:
        logger = logger.bind(**initial_context)
    return logger


@contextmanager
def experiment_context(name: str, master_seed: int) -> Iterator[None]:
    """Tag every log line emitted inside the block with the experiment and seed."""
    with structlog.contextvars.bound_contextvars(experiment=name, master_seed=master_seed):
        yield
