"""Trend checks over the rows of one desk-scale sweep."""

import math
from collections.abc import Sequence
from dataclasses import dataclass

from crancs.models.experiment import ResultRow, Scheme, SweepVariable

MONOTONE_SWEEPS = (SweepVariable.FRONTHAUL_BITS, SweepVariable.TRANSMIT_SNR)


@dataclass(frozen=True)
class GenieGap:
    """genie_zf minus proposed throughput at one sweep point."""

    sweep_value: float
    gap: float
    ci: float

    @property
    def within_ci(self) -> bool:
        return self.gap <= self.ci


def scheme_curve(rows: Sequence[ResultRow], scheme: Scheme) -> list[ResultRow]:
    """Rows of one scheme ordered by sweep value."""
    return sorted((r for r in rows if r.scheme == scheme), key=lambda r: r.sweep_value)


def _ratio(ours: ResultRow, ref: ResultRow) -> float:
    if ref.mean_per_active_user_throughput <= 0.0:
        return math.nan
    return ours.mean_per_active_user_throughput / ref.mean_per_active_user_throughput


def genie_gaps(rows: Sequence[ResultRow]) -> list[GenieGap]:
    """Gap to the genie at every sweep point, with the larger of the two half-widths."""
    proposed = scheme_curve(rows, Scheme.PROPOSED)
    genie = scheme_curve(rows, Scheme.GENIE_ZF)
    return [
        GenieGap(
            sweep_value=ours.sweep_value,
            gap=ref.mean_per_active_user_throughput - ours.mean_per_active_user_throughput,
            ci=max(ours.ci_halfwidth, ref.ci_halfwidth),
        )
        for ours, ref in zip(proposed, genie, strict=True)
    ]


def check_trends(variable: SweepVariable, rows: Sequence[ResultRow]) -> list[str]:
    """Return the trend properties that failed for one sweep.

    Every sweep: proposed stays below genie_zf up to the summed half-widths.
    Fronthaul and SNR sweeps: both curves are non-decreasing up to the summed
    half-widths of neighbours, and proposed/genie rises from the first to the
    last point. Sparsity sweeps: the detection rate at the smallest s beats
    the one at the largest s.
    """
    proposed = scheme_curve(rows, Scheme.PROPOSED)
    genie = scheme_curve(rows, Scheme.GENIE_ZF)
    if not proposed or not genie:
        return ["proposed and genie_zf must both be in the sweep"]

    failures: list[str] = []
    for ours, ref in zip(proposed, genie, strict=True):
        slack = ours.ci_halfwidth + ref.ci_halfwidth
        if ours.mean_per_active_user_throughput > ref.mean_per_active_user_throughput + slack:
            failures.append(f"proposed exceeds genie_zf at {ours.sweep_value:g}")

    if variable in MONOTONE_SWEEPS:
        for scheme, curve in ((Scheme.PROPOSED, proposed), (Scheme.GENIE_ZF, genie)):
            for prev, cur in zip(curve, curve[1:], strict=False):
                slack = prev.ci_halfwidth + cur.ci_halfwidth
                floor = prev.mean_per_active_user_throughput - slack
                if cur.mean_per_active_user_throughput < floor:
                    failures.append(
                        f"{scheme.value} drops from {prev.sweep_value:g} to {cur.sweep_value:g}"
                    )
        first, last = _ratio(proposed[0], genie[0]), _ratio(proposed[-1], genie[-1])
        if not last > first:
            failures.append(f"proposed/genie_zf does not rise: {first:.3f} -> {last:.3f}")
    elif variable == SweepVariable.NUM_ACTIVE:
        first_rate, last_rate = proposed[0].detection_rate, proposed[-1].detection_rate
        if not first_rate > last_rate:
            failures.append(
                f"detection rate does not fall with s: {first_rate:.3f} -> {last_rate:.3f}"
            )
    return failures
