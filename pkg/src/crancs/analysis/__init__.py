"""Capacity, restricted isometry constants, bounds and Monte Carlo checks."""

from crancs.analysis.bounds import (
    RIP_LIMIT,
    c1_constant,
    c2_constant,
    corollary1_bounds,
    corollary1_pr_rip,
    evaluate_bounds,
    lambda_default,
    lambda_high_snr,
    lemma1_error_bound,
    lemma2_noise_bound,
    resolve_lambda,
    theorem2_detection_bound,
    theorem4_capacity_bounds,
)
from crancs.analysis.capacity import (
    linear_receiver_capacity,
    separate_receiver_capacity,
    sum_capacity,
)
from crancs.analysis.montecarlo import (
    ConcentrationEstimate,
    DetectionEstimate,
    RipExperiment,
    detection_probability_mc,
    noise_concentration_mc,
    rip_success_rate,
    student_t_halfwidth,
    weakest_active_energy,
    wilson_interval,
)
from crancs.analysis.ric import RicEstimate, estimate_ric

__all__ = [
    "RIP_LIMIT",
    "c1_constant",
    "c2_constant",
    "lemma1_error_bound",
    "lemma2_noise_bound",
    "theorem2_detection_bound",
    "theorem4_capacity_bounds",
    "corollary1_bounds",
    "corollary1_pr_rip",
    "evaluate_bounds",
    "lambda_default",
    "lambda_high_snr",
    "resolve_lambda",
    "sum_capacity",
    "linear_receiver_capacity",
    "separate_receiver_capacity",
    "estimate_ric",
    "RicEstimate",
    "wilson_interval",
    "student_t_halfwidth",
    "noise_concentration_mc",
    "ConcentrationEstimate",
    "rip_success_rate",
    "RipExperiment",
    "detection_probability_mc",
    "DetectionEstimate",
    "weakest_active_energy",
]
