"""Closed-form performance bounds and basis pursuit threshold presets.

Every evaluator checks the hypothesis it was derived under and raises
``DomainError`` outside of it. Capacities use ``log_base`` (bits by default).
"""

import math

from crancs.core.exceptions import DomainError
from crancs.models.reports import BoundReport
from crancs.models.scenario import ScenarioConfig

RIP_LIMIT = math.sqrt(2.0) - 1.0
POLE_GUARD = 1e-12


def _check_delta(delta: float) -> None:
    if not 0.0 <= delta < RIP_LIMIT:
        raise DomainError(
            f"delta must lie in [0, sqrt(2)-1), got {delta}",
            parameter="delta",
            details={"delta": delta},
        )


def _check_probability(pr_rip: float) -> None:
    if not 0.0 <= pr_rip <= 1.0:
        raise DomainError(
            f"pr_rip must lie in [0, 1], got {pr_rip}",
            parameter="pr_rip",
            details={"pr_rip": pr_rip},
        )


def c2_constant(delta: float) -> float:
    """c₂ = 4√(1+δ)/(1 − (1+√2)δ); +inf just below the pole at √2 − 1."""
    _check_delta(delta)
    if delta > RIP_LIMIT - POLE_GUARD:
        return math.inf
    return 4.0 * math.sqrt(1.0 + delta) / (1.0 - (1.0 + math.sqrt(2.0)) * delta)


def c1_constant(lam: float, num_subcarriers: int) -> float:
    """c₁ = (λ² − N_c)/(4N_c)."""
    return (lam**2 - num_subcarriers) / (4.0 * num_subcarriers)


def lemma1_error_bound(lam: float, delta: float) -> float:
    """‖x − x̂‖ ≤ c₂λ for the basis pursuit estimate."""
    if lam < 0:
        raise DomainError("lambda must be non-negative", parameter="lambda")
    c2 = c2_constant(delta)
    return math.inf if math.isinf(c2) else c2 * lam


def lemma2_noise_bound(lam: float, num_subcarriers: int, num_rrh: int) -> float:
    """Lower bound 1 − exp(−c₁M) on Pr(‖n‖ ≤ λ); needs λ ≥ √(2N_c)."""
    floor = math.sqrt(2.0 * num_subcarriers)
    if lam < floor * (1.0 - 1e-12):
        raise DomainError(
            f"lambda={lam} is below sqrt(2 N_c)={floor:.6g}",
            parameter="lambda",
            details={"lambda": lam, "num_subcarriers": num_subcarriers},
        )
    return 1.0 - math.exp(-c1_constant(lam, num_subcarriers) * num_rrh)


def theorem2_detection_bound(
    num_active: int,
    num_rrh: int,
    num_subcarriers: int,
    lam: float,
    delta: float,
    p_min: float,
    pr_rip: float,
) -> tuple[float, float]:
    """Lower bound on Pr(T̂ = T); returns ``(raw, clipped to [0, 1])``.

    raw = pr_rip·(1 − exp(−c₁M) − s·(1 − exp(−2(c₂λ)²/P_min))), which may be
    negative.
    """
    _check_probability(pr_rip)
    noise_term = lemma2_noise_bound(lam, num_subcarriers, num_rrh)
    c2 = c2_constant(delta)
    if p_min <= 0:
        raise DomainError("p_min must be positive", parameter="p_min")

    if math.isinf(c2):
        miss = 1.0
    elif math.isinf(p_min):
        miss = 0.0
    else:
        miss = 1.0 - math.exp(-2.0 * (c2 * lam) ** 2 / p_min)
    raw = pr_rip * (noise_term - num_active * miss)
    return raw, min(1.0, max(0.0, raw))


def theorem4_capacity_bounds(
    num_active: int,
    num_rrh: int,
    alpha: float,
    power: float,
    delta: float,
    pr_rip: float,
    log_base: float = 2.0,
) -> tuple[float, float]:
    """Average sum-capacity bounds ``(lower, upper)``.

    upper = s·log(1 + MαP), lower = pr_rip·s·log(1 + (1 − δ)MαP).
    """
    if not 0.0 < alpha <= 1.0:
        raise DomainError(f"alpha must lie in (0, 1], got {alpha}", parameter="alpha")
    _check_delta(delta)
    _check_probability(pr_rip)
    upper = num_active * math.log(1.0 + num_rrh * alpha * power, log_base)
    lower = pr_rip * num_active * math.log(1.0 + (1.0 - delta) * num_rrh * alpha * power, log_base)
    return lower, upper


def corollary1_pr_rip(total_users: int) -> float:
    """RIP probability preset 1 − 4/(K·N_c), floored at 0."""
    return max(0.0, 1.0 - 4.0 / total_users)


def corollary1_bounds(
    num_active: int,
    num_rrh: int,
    alpha: float,
    power: float,
    delta: float,
    total_users: int,
    log_base: float = 2.0,
) -> tuple[float, float]:
    """Capacity bounds with the RIP probability replaced by 1 − 4/(K·N_c)."""
    return theorem4_capacity_bounds(
        num_active,
        num_rrh,
        alpha,
        power,
        delta,
        corollary1_pr_rip(total_users),
        log_base,
    )


def lambda_default(num_subcarriers: int) -> float:
    """λ = √(2N_c)."""
    return math.sqrt(2.0 * num_subcarriers)


def lambda_high_snr(power: float, num_subcarriers: int, delta: float) -> float:
    """λ = (P·N_c/(4c₂²))^(1/4)."""
    c2 = c2_constant(delta)
    return (power * num_subcarriers / (4.0 * c2**2)) ** 0.25


def resolve_lambda(cfg: ScenarioConfig) -> float:
    """Threshold selected by ``cfg.lambda_rule``."""
    match cfg.lambda_rule:
        case "fixed":
            assert cfg.bp_threshold is not None
            return cfg.bp_threshold
        case "high_snr":
            assert cfg.lambda_delta is not None
            return lambda_high_snr(cfg.transmit_snr, cfg.num_subcarriers, cfg.lambda_delta)
        case _:
            return lambda_default(cfg.num_subcarriers)


def evaluate_bounds(
    *,
    delta: float | None = None,
    pr_rip: float = 1.0,
    num_active: int | None = None,
    num_rrh: int | None = None,
    alpha: float | None = None,
    power: float | None = None,
    num_subcarriers: int | None = None,
    lam: float | None = None,
    total_users: int | None = None,
    p_min: float | None = None,
    log_base: float = 2.0,
) -> BoundReport:
    """Evaluate every bound whose inputs are present."""
    report = BoundReport(log_base=log_base)
    if delta is not None:
        report.c2 = c2_constant(delta)
        if lam is not None:
            report.lemma1_bound = lemma1_error_bound(lam, delta)
    if lam is not None and num_subcarriers is not None:
        report.c1 = c1_constant(lam, num_subcarriers)
        if num_rrh is not None:
            report.lemma2_bound = lemma2_noise_bound(lam, num_subcarriers, num_rrh)

    if None not in (delta, num_active, num_rrh, num_subcarriers, lam):
        assert delta is not None and num_active is not None and num_rrh is not None
        assert num_subcarriers is not None and lam is not None
        p = p_min if p_min is not None else power
        if p is not None:
            raw, clipped = theorem2_detection_bound(
                num_active, num_rrh, num_subcarriers, lam, delta, p, pr_rip
            )
            report.thm2_lower_raw = raw
            report.thm2_lower_clipped = clipped

    if None not in (delta, num_active, num_rrh, alpha, power):
        assert delta is not None and num_active is not None and num_rrh is not None
        assert alpha is not None and power is not None
        report.thm4_lower, report.thm4_upper = theorem4_capacity_bounds(
            num_active, num_rrh, alpha, power, delta, pr_rip, log_base
        )
        if total_users is not None:
            report.corollary1_lower = corollary1_bounds(
                num_active, num_rrh, alpha, power, delta, total_users, log_base
            )[0]
    return report
