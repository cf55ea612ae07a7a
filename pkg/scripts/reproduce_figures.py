#!/usr/bin/env python3
"""Run the three desk-scale sweeps and check their throughput trends."""

import json
from pathlib import Path

import typer

from crancs.core.config import get_settings
from crancs.core.logging import configure_logging
from crancs.harness.config_file import apply_overrides, load_experiment_spec
from crancs.harness.results import emit_results
from crancs.harness.runner import run_experiment
from crancs.harness.trends import check_trends, genie_gaps

CONFIG_DIR = Path(__file__).resolve().parent.parent / "configs"
CONFIGS = ("d1_fig4", "d1_fig5", "d1_fig6")


def main(
    trials: int | None = typer.Option(None, "--trials", help="Override trials per point"),
    output: Path = typer.Option(Path("results"), "--output", help="Result directory"),
) -> None:
    """Run the sweeps."""
    settings = get_settings()
    configure_logging(settings)

    print("=" * 60)
    print("Desk-scale throughput sweeps")
    print("=" * 60)

    summary: dict[str, dict[str, object]] = {}
    for name in CONFIGS:
        spec = apply_overrides(load_experiment_spec(CONFIG_DIR / f"{name}.toml"), n_trials=trials)
        print(f"\n{name}: {spec.sweep_variable.value} over {spec.sweep_values}")
        result = run_experiment(spec, settings=settings)
        emit_results(result.rows, output / f"{name}.csv", fmt="all", metadata=result.metadata)

        for row in result.rows:
            print(
                f"  {row.sweep_value:>6g} {row.scheme.value:<14} "
                f"{row.mean_per_active_user_throughput:8.4f} ± {row.ci_halfwidth:.4f}  "
                f"det={row.detection_rate:.3f} invalid={row.invalid_trials}"
            )
        gaps = genie_gaps(result.rows)
        for gap in gaps:
            mark = "within CI" if gap.within_ci else "outside CI"
            print(f"  gap to genie_zf at {gap.sweep_value:g}: {gap.gap:.4f} ({mark} {gap.ci:.4f})")
        summary[name] = {
            "failures": check_trends(spec.sweep_variable, result.rows),
            "genie_gap": [
                {"sweep_value": g.sweep_value, "gap": g.gap, "ci": g.ci} for g in gaps
            ],
        }

    print("\n" + "=" * 60)
    for name, entry in summary.items():
        failures = entry["failures"]
        assert isinstance(failures, list)
        print(f"{'[PASS]' if not failures else '[FAIL]'} {name}")
        for failure in failures:
            print(f"       {failure}")

    report_path = output / "trend_report.json"
    report_path.write_text(json.dumps(summary, indent=2))
    print(f"\nReport saved to: {report_path}")


if __name__ == "__main__":
    typer.run(main)
