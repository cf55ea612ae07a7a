"""Monte Carlo estimators that confront the bounds with simulation."""

import math
from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
from scipy import stats

from crancs.analysis.bounds import RIP_LIMIT, lemma2_noise_bound, resolve_lambda
from crancs.analysis.ric import estimate_ric
from crancs.compression.matrices import generate_compression_matrices
from crancs.core.exceptions import CranError
from crancs.core.logging import get_logger
from crancs.core.rng import RandomStreams
from crancs.models.experiment import SolverConfig
from crancs.models.realization import ComplexArray, IndexArray
from crancs.models.scenario import ScenarioConfig
from crancs.recovery.pipeline import run_proposed
from crancs.recovery.system import assemble_theta, draw_realization
from crancs.scenario.channel import generate_channel
from crancs.scenario.geometry import generate_geometry

logger = get_logger(__name__)

NOISE_CHUNK = 2000


def wilson_interval(successes: int, n: int, confidence: float = 0.95) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion; NaNs when n = 0."""
    if n <= 0:
        return math.nan, math.nan
    z = float(stats.norm.ppf(0.5 + confidence / 2.0))
    p = successes / n
    denom = 1.0 + z**2 / n
    center = (p + z**2 / (2 * n)) / denom
    half = z * math.sqrt(p * (1.0 - p) / n + z**2 / (4 * n**2)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def student_t_halfwidth(values: Sequence[float], confidence: float = 0.95) -> float:
    """Half-width of the Student-t confidence interval of the mean."""
    n = len(values)
    if n == 0:
        return math.nan
    if n == 1:
        return 0.0
    t = float(stats.t.ppf(0.5 + confidence / 2.0, n - 1))
    return t * float(np.std(values, ddof=1)) / math.sqrt(n)


@dataclass(frozen=True)
class ConcentrationEstimate:
    """Empirical Pr(‖n‖ ≤ λ) next to its analytical lower bound."""

    probability: float
    std_error: float
    bound: float | None
    n_trials: int


def noise_concentration_mc(
    num_subcarriers: int,
    num_rrh: int,
    num_measurements: int,
    lam: float,
    n_trials: int,
    rng: np.random.Generator,
) -> ConcentrationEstimate:
    """Draw n = [A_1 n_1; ...; A_M n_M] with fresh matrices every trial."""
    scale = math.sqrt(1.0 / (num_rrh * num_measurements))
    hits = 0
    remaining = n_trials
    while remaining > 0:
        batch = min(NOISE_CHUNK, remaining)
        phases = rng.uniform(
            0.0, 2.0 * np.pi, size=(batch, num_rrh, num_measurements, num_subcarriers)
        )
        thermal = math.sqrt(0.5) * (
            rng.standard_normal((batch, num_rrh, num_subcarriers))
            + 1j * rng.standard_normal((batch, num_rrh, num_subcarriers))
        )
        aggregate = np.einsum("bmrc,bmc->bmr", scale * np.exp(1j * phases), thermal)
        norms = np.sqrt(np.sum(np.abs(aggregate) ** 2, axis=(1, 2)))
        hits += int(np.count_nonzero(norms <= lam))
        remaining -= batch

    p = hits / n_trials
    bound = (
        lemma2_noise_bound(lam, num_subcarriers, num_rrh)
        if lam >= math.sqrt(2.0 * num_subcarriers) * (1.0 - 1e-12)
        else None
    )
    return ConcentrationEstimate(
        probability=p,
        std_error=math.sqrt(p * (1.0 - p) / n_trials),
        bound=bound,
        n_trials=n_trials,
    )


@dataclass(frozen=True)
class RipExperiment:
    """Share of channel/compression draws whose exhaustive δ̂ stays below √2 − 1."""

    success_rate: float
    deltas: tuple[float, ...]
    order: int


def rip_success_rate(cfg: ScenarioConfig, order: int, n_draws: int) -> RipExperiment:
    """Draw Θ ``n_draws`` times from the scenario and brute-force its RIC."""
    deltas: list[float] = []
    for draw in range(n_draws):
        streams = RandomStreams.from_seed(cfg.master_seed, draw)
        channel = generate_channel(cfg, generate_geometry(cfg, streams.geometry), streams.channel)
        matrices = generate_compression_matrices(
            cfg.num_rrh, cfg.measurements, cfg.num_subcarriers, streams.compression
        )
        deltas.append(estimate_ric(assemble_theta(channel, matrices), order).delta)
    successes = sum(d < RIP_LIMIT for d in deltas)
    return RipExperiment(
        success_rate=successes / n_draws if n_draws else math.nan,
        deltas=tuple(deltas),
        order=order,
    )


@dataclass(frozen=True)
class DetectionEstimate:
    """Empirical Pr(T̂ = T) with its Wilson interval.

    ``degenerate`` marks s = 0, where the rate follows the all-zero rough
    estimate convention and is kept out of headline metrics. For every valid
    trial, ``weakest_energy`` holds min over active j of |x(j)|²·‖θ_j‖² and
    ``trial_correct`` holds whether T̂ = T.
    """

    rate: float
    low: float
    high: float
    successes: int
    valid_trials: int
    invalid_trials: int
    degenerate: bool = False
    failures: list[str] = field(default_factory=list)
    weakest_energy: tuple[float, ...] = ()
    trial_correct: tuple[bool, ...] = ()

    def conditional_rate(self, energy_floor: float) -> tuple[float, int]:
        """Detection rate over the valid trials whose weakest user reaches ``energy_floor``.

        Returns ``(rate, trials)``; the rate is NaN when no trial qualifies.
        """
        kept = [
            correct
            for energy, correct in zip(self.weakest_energy, self.trial_correct, strict=True)
            if energy >= energy_floor
        ]
        if not kept:
            return math.nan, 0
        return sum(kept) / len(kept), len(kept)


def weakest_active_energy(theta: ComplexArray, x: ComplexArray, support: IndexArray) -> float:
    """min_j |x(j)|²·‖θ_j‖² over the active set, +inf when nobody is active."""
    if support.size == 0:
        return math.inf
    energies = np.abs(x[support]) ** 2 * np.sum(np.abs(theta[:, support]) ** 2, axis=0)
    return float(np.min(energies))


def detection_probability_mc(
    cfg: ScenarioConfig,
    n_trials: int,
    solver: SolverConfig | None = None,
    confidence: float = 0.95,
) -> DetectionEstimate:
    """Run the proposed receiver ``n_trials`` times on independent streams."""
    lam = resolve_lambda(cfg)
    successes = valid = invalid = 0
    failures: list[str] = []
    energies: list[float] = []
    outcomes: list[bool] = []
    for trial in range(n_trials):
        streams = RandomStreams.from_seed(cfg.master_seed, trial)
        try:
            realization = draw_realization(cfg, streams, lam)
            result = run_proposed(realization.system, solver)
        except CranError as e:
            invalid += 1
            failures.append(str(e))
            logger.warning("Detection trial failed", trial=trial, error=str(e))
            continue
        if not result.valid:
            invalid += 1
            continue
        valid += 1
        signal = realization.signal
        result.mark_detection(signal.support)
        correct = bool(result.detection_correct)
        successes += int(correct)
        outcomes.append(correct)
        energies.append(weakest_active_energy(realization.system.theta, signal.x, signal.support))

    low, high = wilson_interval(successes, valid, confidence)
    return DetectionEstimate(
        rate=successes / valid if valid else math.nan,
        low=low,
        high=high,
        successes=successes,
        valid_trials=valid,
        invalid_trials=invalid,
        degenerate=cfg.num_active == 0,
        failures=failures,
        weakest_energy=tuple(energies),
        trial_correct=tuple(outcomes),
    )
