"""Tests for geometry, channel and signal generation."""

import numpy as np
import pytest

from crancs.core.exceptions import ConfigurationError, DimensionError
from crancs.core.rng import RandomStreams
from crancs.models.realization import Geometry
from crancs.models.scenario import ScenarioConfig
from crancs.scenario.channel import (
    circular_gaussian,
    generate_channel,
    normalize_large_scale,
    pathloss_amplitude,
    received_signals,
)
from crancs.scenario.geometry import generate_geometry, uniform_disk
from crancs.scenario.signal import generate_signal


class TestGeometry:
    """Tests for the uniform disk drop."""

    def test_points_inside_disk(self, rng: np.random.Generator) -> None:
        """Test every point lies within the radius."""
        points = uniform_disk(500, 100.0, rng)
        assert points.shape == (500, 2)
        assert np.all(np.linalg.norm(points, axis=1) <= 100.0)

    def test_mean_squared_radius(self, rng: np.random.Generator) -> None:
        """Test area-uniform drops have E[r²] = radius²/2."""
        points = uniform_disk(100_000, 2000.0, rng)
        mean_sq = float(np.mean(np.sum(points**2, axis=1)))
        assert mean_sq == pytest.approx(2000.0**2 / 2.0, rel=0.02)

    def test_shapes(self, small_scenario: ScenarioConfig, streams: RandomStreams) -> None:
        """Test RRH and UE arrays follow (M, 2) and (N_c, K, 2)."""
        geometry = generate_geometry(small_scenario, streams.geometry)
        assert geometry.rrh_positions.shape == (4, 2)
        assert geometry.ue_positions.shape == (4, 2, 2)
        assert geometry.distances().shape == (4, 4, 2)


class TestChannel:
    """Tests for the statistical channel."""

    def test_pathloss_reference_distance(self) -> None:
        """Test distances under 1 m are clamped to unit gain."""
        gains = pathloss_amplitude(np.array([0.2, 1.0, 10.0]), 2.0)
        np.testing.assert_allclose(gains, [1.0, 1.0, 0.1])

    def test_normalization(self, rng: np.random.Generator) -> None:
        """Test Σ_i g² = M per UE after rescaling."""
        raw = rng.random((5, 3, 2)) + 0.1
        norm = normalize_large_scale(raw)
        np.testing.assert_allclose(np.sum(norm**2, axis=0), 5.0)

    def test_unit_variance_fading(self, rng: np.random.Generator) -> None:
        """Test CN(0, 1) samples have unit power."""
        samples = circular_gaussian((200_000,), rng)
        assert abs(np.mean(np.abs(samples) ** 2) - 1.0) < 0.02

    def test_generated_channel(
        self, small_scenario: ScenarioConfig, streams: RandomStreams
    ) -> None:
        """Test shapes and large-scale normalisation of a drawn channel."""
        geometry = generate_geometry(small_scenario, streams.geometry)
        channel = generate_channel(small_scenario, geometry, streams.channel)
        assert channel.gains.shape == (4, 4, 2)
        assert channel.total_users == 8
        assert channel.normalization_error() < 1e-12
        assert channel.peak_gain <= 2.0

    def test_geometry_mismatch(self, small_scenario: ScenarioConfig, streams: RandomStreams) -> None:
        """Test a geometry from another scenario is refused."""
        other = small_scenario.model_copy(update={"num_rrh": 3})
        geometry = generate_geometry(other, streams.geometry)
        with pytest.raises(DimensionError):
            generate_channel(small_scenario, geometry, streams.channel)

    def test_received_matches_stacked_matrix(
        self, small_scenario: ScenarioConfig, streams: RandomStreams
    ) -> None:
        """Test the banded product equals H_i x for every RRH."""
        geometry = generate_geometry(small_scenario, streams.geometry)
        channel = generate_channel(small_scenario, geometry, streams.channel)
        x = generate_signal(small_scenario, streams.signal).x
        y, noise = received_signals(channel, x, streams.noise, noise_enabled=False)
        assert y.shape == (4, 4)
        assert not np.any(noise)
        np.testing.assert_allclose(y.reshape(-1), channel.stacked_matrix() @ x)

    def test_noise_added(self, small_scenario: ScenarioConfig, streams: RandomStreams) -> None:
        """Test y − n is the noiseless signal."""
        geometry = generate_geometry(small_scenario, streams.geometry)
        channel = generate_channel(small_scenario, geometry, streams.channel)
        x = generate_signal(small_scenario, streams.signal).x
        y, noise = received_signals(channel, x, streams.noise)
        assert np.any(noise)
        np.testing.assert_allclose((y - noise).reshape(-1), channel.stacked_matrix() @ x)

    def test_wrong_signal_length(
        self, small_scenario: ScenarioConfig, streams: RandomStreams
    ) -> None:
        """Test a signal of the wrong length is refused."""
        geometry = generate_geometry(small_scenario, streams.geometry)
        channel = generate_channel(small_scenario, geometry, streams.channel)
        with pytest.raises(DimensionError):
            received_signals(channel, np.zeros(5, complex), streams.noise)

    def test_unit_average_gain_at_equal_distance(self, rng: np.random.Generator) -> None:
        """Test E|H|² = 1 when every RRH sees the UE from the same distance."""
        n_c, k = 100, 250
        cfg = ScenarioConfig(
            num_rrh=4, users_per_carrier=k, num_subcarriers=n_c, num_active=0, transmit_snr=1.0
        )
        angles = np.arange(4) * np.pi / 2.0
        geometry = Geometry(
            rrh_positions=500.0 * np.column_stack((np.cos(angles), np.sin(angles))),
            ue_positions=np.zeros((n_c, k, 2)),
            cell_radius=2000.0,
        )
        channel = generate_channel(cfg, geometry, rng)
        np.testing.assert_allclose(channel.large_scale, 1.0)
        assert float(np.mean(np.abs(channel.gains) ** 2)) == pytest.approx(1.0, rel=0.03)

    def test_single_user_hits_one_subcarrier(
        self, small_scenario: ScenarioConfig, streams: RandomStreams
    ) -> None:
        """Test UE (c, k) only reaches entry c of every y_i."""
        geometry = generate_geometry(small_scenario, streams.geometry)
        channel = generate_channel(small_scenario, geometry, streams.channel)
        c, slot = 2, 1
        x = np.zeros(8, complex)
        x[c * 2 + slot] = 1.0 + 1.0j
        y, _ = received_signals(channel, x, streams.noise, noise_enabled=False)
        others = np.delete(np.arange(4), c)
        assert not np.any(y[:, others])
        np.testing.assert_allclose(y[:, c], channel.gains[:, c, slot] * x[c * 2 + slot])


class TestSignal:
    """Tests for the sparse signal."""

    def test_support(self, small_scenario: ScenarioConfig, streams: RandomStreams) -> None:
        """Test s sorted distinct indices carry all the energy."""
        signal = generate_signal(small_scenario, streams.signal)
        assert signal.sparsity == 2
        assert np.all(np.diff(signal.support) > 0)
        mask = np.zeros(8, dtype=bool)
        mask[signal.support] = True
        assert np.all(signal.x[~mask] == 0)
        assert np.all(signal.x[mask] != 0)
        np.testing.assert_allclose(signal.powers, 100.0)

    def test_nobody_active(self, small_scenario: ScenarioConfig, streams: RandomStreams) -> None:
        """Test s = 0 gives the zero vector."""
        cfg = small_scenario.model_copy(update={"num_active": 0})
        signal = generate_signal(cfg, streams.signal)
        assert signal.sparsity == 0
        assert not np.any(signal.x)
        assert signal.min_power == float("inf")

    def test_too_many_active(self, streams: RandomStreams) -> None:
        """Test s > K·N_c raises even when validation was bypassed."""
        cfg = ScenarioConfig.model_construct(
            num_rrh=1, users_per_carrier=1, num_subcarriers=2, num_active=3, transmit_snr=1.0
        )
        with pytest.raises(ConfigurationError):
            generate_signal(cfg, streams.signal)

    def test_reproducible(self, small_scenario: ScenarioConfig) -> None:
        """Test the same seed gives the same support and symbols."""
        a = generate_signal(small_scenario, RandomStreams.from_seed(5).signal)
        b = generate_signal(small_scenario, RandomStreams.from_seed(5).signal)
        np.testing.assert_array_equal(a.support, b.support)
        np.testing.assert_array_equal(a.x, b.x)

    def test_average_energy(self, small_scenario: ScenarioConfig, rng: np.random.Generator) -> None:
        """Test E‖x‖² = s·P over independent draws."""
        energies = [
            float(np.sum(np.abs(generate_signal(small_scenario, rng).x) ** 2))
            for _ in range(10_000)
        ]
        assert float(np.mean(energies)) == pytest.approx(2 * 100.0, rel=0.03)
