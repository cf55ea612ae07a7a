"""Pytest configuration and fixtures."""

from pathlib import Path

import numpy as np
import pytest

from crancs.analysis.bounds import lambda_default
from crancs.core.config import Settings
from crancs.core.rng import RandomStreams
from crancs.models.experiment import ExperimentSpec, Scheme, SweepVariable
from crancs.models.scenario import ScenarioConfig
from crancs.recovery.system import Realization, draw_realization

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"


@pytest.fixture
def settings() -> Settings:
    """Create test settings."""
    return Settings(debug=True, log_level="DEBUG", max_workers=1)


@pytest.fixture
def small_scenario() -> ScenarioConfig:
    """M=4 RRHs, K=2, N_c=4 (8 UEs), two active at 20 dB."""
    return ScenarioConfig(
        num_rrh=4,
        users_per_carrier=2,
        num_subcarriers=4,
        num_active=2,
        transmit_snr=100.0,
        master_seed=7,
    )


@pytest.fixture
def noiseless_scenario(small_scenario: ScenarioConfig) -> ScenarioConfig:
    """The small scenario with thermal noise switched off."""
    return small_scenario.model_copy(update={"noise_enabled": False})


@pytest.fixture
def streams() -> RandomStreams:
    """Named random streams under a fixed seed."""
    return RandomStreams.from_seed(7)


@pytest.fixture
def realization(small_scenario: ScenarioConfig, streams: RandomStreams) -> Realization:
    """One drawn trial of the small scenario at λ = √(2N_c)."""
    return draw_realization(small_scenario, streams, lambda_default(small_scenario.num_subcarriers))


@pytest.fixture
def rng() -> np.random.Generator:
    """Plain generator for ad-hoc matrices."""
    return np.random.default_rng(1234)


@pytest.fixture
def tiny_spec(small_scenario: ScenarioConfig) -> ExperimentSpec:
    """Two sweep points, three trials, genie and OMP only."""
    return ExperimentSpec(
        name="tiny",
        base=small_scenario,
        sweep_variable=SweepVariable.NUM_ACTIVE,
        sweep_values=[1, 2],
        n_trials=3,
        schemes=[Scheme.GENIE_ZF, Scheme.OMP_ZF],
    )


@pytest.fixture
def tiny_config_text() -> str:
    """A complete TOML experiment file for the small scenario."""
    return """
schema_version = 1
name = "tiny"

[scenario]
num_rrh = 4
users_per_carrier = 2
num_subcarriers = 4
num_active = 2
transmit_snr_db = 20.0
master_seed = 11

[sweep]
variable = "num_active"
values = [1, 2]

[run]
n_trials = 2
schemes = ["genie_zf", "omp_zf"]

[bounds]
theorem4 = true
"""
