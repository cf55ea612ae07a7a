"""Tests for compression matrices and the fronthaul quantizer."""

import numpy as np
import pytest

from crancs.compression.matrices import compress, generate_compression_matrices
from crancs.compression.quantizer import (
    dynamic_range,
    measure_distortion,
    quantize,
    quantize_fronthaul,
)
from crancs.core.exceptions import ConfigurationError, DimensionError
from crancs.models.scenario import QuantizerConfig


class TestCompressionMatrices:
    """Tests for the random-phase matrices."""

    def test_shapes_and_modulus(self, rng: np.random.Generator) -> None:
        """Test M matrices of shape (R, N_c) with entries of modulus √(1/(M·R))."""
        matrices = generate_compression_matrices(3, 2, 5, rng)
        assert len(matrices) == 3
        for a in matrices:
            assert a.shape == (2, 5)
            np.testing.assert_allclose(np.abs(a), np.sqrt(1.0 / 6.0))

    def test_matrices_differ_per_rrh(self, rng: np.random.Generator) -> None:
        """Test every RRH gets its own draw."""
        a1, a2 = generate_compression_matrices(2, 3, 3, rng)
        assert not np.allclose(a1, a2)

    @pytest.mark.parametrize("measurements", [0, 6])
    def test_invalid_measurements(self, rng: np.random.Generator, measurements: int) -> None:
        """Test R outside [1, N_c] is refused."""
        with pytest.raises(ConfigurationError):
            generate_compression_matrices(2, measurements, 5, rng)

    def test_no_rrh(self, rng: np.random.Generator) -> None:
        """Test M = 0 is refused."""
        with pytest.raises(ConfigurationError):
            generate_compression_matrices(0, 1, 5, rng)

    def test_compress(self, rng: np.random.Generator) -> None:
        """Test z_i = A_i y_i and shape checking."""
        (a,) = generate_compression_matrices(1, 2, 4, rng)
        y = np.arange(4) + 1j
        np.testing.assert_allclose(compress(a, y), a @ y)
        with pytest.raises(DimensionError):
            compress(a, np.ones(3, complex))

    def test_compress_is_linear(self, rng: np.random.Generator) -> None:
        """Test A(αy₁ + βy₂) = αAy₁ + βAy₂."""
        (a,) = generate_compression_matrices(1, 3, 6, rng)
        y1 = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        y2 = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        alpha, beta = 2.0 - 1.0j, -0.5j
        np.testing.assert_allclose(
            compress(a, alpha * y1 + beta * y2),
            alpha * compress(a, y1) + beta * compress(a, y2),
            atol=1e-12,
        )


class TestQuantizer:
    """Tests for the uniform mid-rise quantizer."""

    def test_disabled_is_lossless(self, rng: np.random.Generator) -> None:
        """Test a disabled quantizer returns the input untouched."""
        z = rng.standard_normal(6) + 1j * rng.standard_normal(6)
        z_hat, error = quantize(z, QuantizerConfig())
        np.testing.assert_array_equal(z_hat, z)
        assert error == 0.0
        assert z_hat is not z

    @pytest.mark.parametrize("bits", [4, 10, 32])
    def test_error_within_half_step(self, rng: np.random.Generator, bits: int) -> None:
        """Test every part lands within half a step inside the dynamic range."""
        z = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        z_hat, error = quantize(z, QuantizerConfig(bits_per_dimension=bits, enabled=True))
        step = 2.0 * dynamic_range(z) / 2 ** (bits // 2)
        assert np.all(np.abs(z_hat.real - z.real) <= step / 2 + 1e-12)
        assert np.all(np.abs(z_hat.imag - z.imag) <= step / 2 + 1e-12)
        assert error <= np.sqrt(16) * step / 2 + 1e-12

    def test_levels_are_reconstruction_points(self) -> None:
        """Test outputs sit at (index + 1/2)·step."""
        z = np.array([0.3 + 0.1j, -0.2 - 0.4j])
        z_hat, _ = quantize(
            z, QuantizerConfig(bits_per_dimension=4, enabled=True), scale=1.0
        )
        step = 0.5
        for value in (*z_hat.real, *z_hat.imag):
            assert np.isclose((value / step - 0.5) % 1.0, 0.0) or np.isclose(
                (value / step - 0.5) % 1.0, 1.0
            )

    def test_clipping(self) -> None:
        """Test values beyond the range saturate at the outer level."""
        z = np.array([10.0 + 0j])
        z_hat, _ = quantize(z, QuantizerConfig(bits_per_dimension=4, enabled=True), scale=1.0)
        assert z_hat[0].real == pytest.approx(0.75)

    def test_dither_needs_stream(self) -> None:
        """Test dithered quantization without a generator is refused."""
        cfg = QuantizerConfig(bits_per_dimension=8, enabled=True, dither=True)
        with pytest.raises(ConfigurationError):
            quantize(np.ones(3, complex), cfg)

    def test_dither_is_subtracted(self, rng: np.random.Generator) -> None:
        """Test subtractive dither keeps the error within one step per part."""
        z = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        cfg = QuantizerConfig(bits_per_dimension=10, enabled=True, dither=True)
        z_hat, _ = quantize(z, cfg, np.random.default_rng(0))
        step = 2.0 * dynamic_range(z) / 2**5
        assert np.all(np.abs(z_hat.real - z.real) <= step + 1e-12)

    def test_fronthaul_stacks_blocks(self, rng: np.random.Generator) -> None:
        """Test per-RRH quantization stacks ẑ and returns n̂ = ẑ − z."""
        blocks = [rng.standard_normal(3) + 1j * rng.standard_normal(3) for _ in range(2)]
        cfg = QuantizerConfig(bits_per_dimension=6, enabled=True)
        z_hat, error = quantize_fronthaul(blocks, cfg)
        z = np.concatenate(blocks)
        assert z_hat.shape == (6,)
        np.testing.assert_allclose(error, z_hat - z)

    def test_distortion_halves_per_two_bits(self) -> None:
        """Test the relative error falls about 2x for every 2 extra bits."""
        curve = measure_distortion(
            [6, 8, 10, 12, 14, 16], np.random.default_rng(0), n_vectors=100
        )
        assert list(curve.mean_relative_error) == sorted(curve.mean_relative_error, reverse=True)
        assert -0.6 < curve.slope < -0.4

    def test_idempotent_at_fixed_scale(self, rng: np.random.Generator) -> None:
        """Test quantizing a reconstruction point again returns it unchanged."""
        z = rng.standard_normal(16) + 1j * rng.standard_normal(16)
        cfg = QuantizerConfig(bits_per_dimension=8, enabled=True)
        scale = dynamic_range(z)
        once, _ = quantize(z, cfg, scale=scale)
        twice, error = quantize(once, cfg, scale=scale)
        np.testing.assert_allclose(twice, once, atol=1e-12)
        assert error == pytest.approx(0.0, abs=1e-12)

    def test_high_resolution_is_nearly_lossless(self, rng: np.random.Generator) -> None:
        """Test 32 bits per dimension keep the relative error below 1e-4."""
        z = rng.uniform(-1.0, 1.0, 64) + 1j * rng.uniform(-1.0, 1.0, 64)
        _, error = quantize(z, QuantizerConfig(bits_per_dimension=32, enabled=True))
        assert error / np.linalg.norm(z) < 1e-4
