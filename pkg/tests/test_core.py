"""Tests for core utilities."""

import numpy as np
import pytest
import structlog
from pydantic import ValidationError

from crancs.core.config import Settings, get_settings
from crancs.core.exceptions import (
    ConfigurationError,
    CranError,
    DimensionError,
    DomainError,
    SolverError,
    TrialError,
)
from crancs.core.logging import (
    configure_logging,
    experiment_context,
    get_logger,
    numpy_to_builtin,
)
from crancs.core.rng import STREAM_NAMES, RandomStreams, derive_generator


class TestSettings:
    """Tests for Settings configuration."""

    def test_default_settings(self) -> None:
        """Test default settings values."""
        settings = Settings()
        assert settings.debug is False
        assert settings.output_dir == "./results"
        assert settings.max_workers == 1
        assert settings.log_format == "console"

    def test_settings_override(self) -> None:
        """Test settings can be overridden."""
        settings = Settings(debug=True, max_workers=4, log_level="DEBUG")
        assert settings.debug is True
        assert settings.max_workers == 4
        assert settings.log_level == "DEBUG"

    def test_worker_count_must_be_positive(self) -> None:
        """Test zero workers are rejected."""
        with pytest.raises(ValidationError):
            Settings(max_workers=0)

    def test_env_prefix(self, monkeypatch: pytest.MonkeyPatch) -> None:
        """Test CRANCS_ environment variables are read."""
        monkeypatch.setenv("CRANCS_OUTPUT_DIR", "/tmp/elsewhere")
        assert Settings().output_dir == "/tmp/elsewhere"

    def test_get_settings_cached(self) -> None:
        """Test settings are cached."""
        get_settings.cache_clear()
        settings1 = get_settings()
        settings2 = get_settings()
        assert settings1 is settings2


class TestExceptions:
    """Tests for custom exceptions."""

    def test_cran_error_basic(self) -> None:
        """Test basic CranError."""
        error = CranError("Something went wrong")
        assert str(error) == "Something went wrong"
        assert error.message == "Something went wrong"
        assert error.details == {}

    def test_cran_error_with_details(self) -> None:
        """Test CranError with details."""
        error = CranError("Failed", details={"rows": 16})
        assert "Failed" in str(error)
        assert "rows" in str(error)

    def test_subclasses_carry_context(self) -> None:
        """Test the extra attributes of the specialised errors."""
        assert DimensionError("bad", operation="compress").operation == "compress"
        assert DomainError("bad", parameter="delta").parameter == "delta"
        assert SolverError("bad", iterations=12).iterations == 12
        error = TrialError("bad", trial_index=3, scheme="proposed")
        assert error.trial_index == 3
        assert error.scheme == "proposed"

    def test_hierarchy(self) -> None:
        """Test every error is a CranError."""
        for cls in (ConfigurationError, SolverError, TrialError):
            assert issubclass(cls, CranError)


class TestLogging:
    """Tests for logging configuration."""

    def test_configure_logging(self, settings: Settings) -> None:
        """Test logging can be configured."""
        configure_logging(settings)
        logger = get_logger("test")
        assert logger is not None

    def test_json_format(self) -> None:
        """Test the JSON renderer can be selected."""
        configure_logging(Settings(log_format="json"))
        assert get_logger("test") is not None

    def test_logger_with_context(self, settings: Settings) -> None:
        """Test logger with initial context."""
        configure_logging(settings)
        logger = get_logger("test", trial_index=4)
        assert logger is not None

    def test_numpy_values_become_builtin(self) -> None:
        """Test numpy scalars, arrays and complex values render as plain types."""
        event = numpy_to_builtin(
            None,
            "info",
            {
                "count": np.int64(3),
                "small": np.arange(3),
                "large": np.zeros((4, 4)),
                "gain": 1 + 2j,
            },
        )
        assert event["count"] == 3 and type(event["count"]) is int
        assert event["small"] == [0, 1, 2]
        assert event["large"].startswith("<ndarray shape=(4, 4)")
        assert event["gain"] == "1+2j"

    def test_experiment_context(self) -> None:
        """Test the experiment tags are bound only inside the block."""
        with experiment_context("tiny", 7):
            assert structlog.contextvars.get_contextvars() == {
                "experiment": "tiny",
                "master_seed": 7,
            }
        assert "experiment" not in structlog.contextvars.get_contextvars()


class TestRandomStreams:
    """Tests for seeded stream derivation."""

    def test_same_key_same_draws(self) -> None:
        """Test a (seed, key) pair fully determines the generator."""
        a = derive_generator(42, 1, 2).standard_normal(5)
        b = derive_generator(42, 1, 2).standard_normal(5)
        np.testing.assert_array_equal(a, b)

    def test_keys_are_independent(self) -> None:
        """Test neighbouring keys give different draws."""
        a = derive_generator(42, 0, 1).random(5)
        b = derive_generator(42, 1, 0).random(5)
        assert not np.allclose(a, b)

    def test_named_streams_differ(self) -> None:
        """Test the named streams of one trial are distinct."""
        streams = RandomStreams.from_seed(3, 0, 0)
        draws = [getattr(streams, name).random(4) for name in STREAM_NAMES]
        for i in range(len(draws)):
            for j in range(i + 1, len(draws)):
                assert not np.allclose(draws[i], draws[j])

    def test_stream_is_reproducible(self) -> None:
        """Test rebuilding streams reproduces every stream."""
        first = RandomStreams.from_seed(9, 2, 5)
        second = RandomStreams.from_seed(9, 2, 5)
        np.testing.assert_array_equal(first.signal.random(3), second.signal.random(3))
        np.testing.assert_array_equal(first.noise.random(3), second.noise.random(3))
