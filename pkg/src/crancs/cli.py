"""Command-line interface for the fronthaul compression simulator."""

import json
import math
import sys
from pathlib import Path
from typing import cast

import click
import typer
from pydantic import ValidationError
from rich.console import Console
from rich.panel import Panel
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn, TimeElapsedColumn
from rich.table import Table

from crancs import __version__
from crancs.analysis.bounds import RIP_LIMIT, evaluate_bounds
from crancs.analysis.ric import estimate_ric
from crancs.compression.matrices import generate_compression_matrices
from crancs.core.config import get_settings
from crancs.core.exceptions import ConfigurationError, CranError
from crancs.core.logging import configure_logging
from crancs.core.rng import RandomStreams
from crancs.harness.config_file import apply_overrides, load_experiment_spec
from crancs.harness.results import ResultFormat, emit_results
from crancs.harness.runner import run_experiment
from crancs.models.experiment import ExperimentSpec, ResultRow
from crancs.models.scenario import ScenarioConfig
from crancs.recovery.system import assemble_theta
from crancs.scenario.channel import generate_channel
from crancs.scenario.geometry import generate_geometry

app = typer.Typer(
    name="crancs",
    help="Uplink C-RAN fronthaul compression and sparse recovery simulator",
    no_args_is_help=True,
)
console = Console()
err_console = Console(stderr=True)


def version_callback(value: bool) -> None:
    """Print version and exit."""
    if value:
        console.print(f"crancs version: {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        None,
        "--version",
        "-v",
        help="Show version and exit",
        callback=version_callback,
        is_eager=True,
    ),
    debug: bool = typer.Option(False, "--debug", "-d", help="Enable debug logging"),
) -> None:
    """Uplink C-RAN fronthaul compression and sparse recovery simulator."""
    settings = get_settings()
    if debug:
        settings = settings.model_copy(update={"debug": True, "log_level": "DEBUG"})
    configure_logging(settings)


def _format_float(value: float, digits: int = 4) -> str:
    return "-" if math.isnan(value) else f"{value:.{digits}f}"


def _summary_table(spec: ExperimentSpec, rows: list[ResultRow], unit: str) -> Table:
    table = Table(title=f"{spec.name} ({unit} per active user)")
    table.add_column(spec.sweep_variable.value, justify="right")
    table.add_column("Scheme", style="cyan")
    table.add_column("Throughput", justify="right")
    table.add_column("± CI", justify="right")
    table.add_column("Detection", justify="right")
    table.add_column("Invalid", justify="right")
    table.add_column("ms/trial", justify="right")
    for row in rows:
        table.add_row(
            f"{row.sweep_value:g}",
            row.scheme.value,
            _format_float(row.mean_per_active_user_throughput),
            _format_float(row.ci_halfwidth),
            _format_float(row.detection_rate, 3),
            str(row.invalid_trials),
            _format_float(row.wall_time_ms, 1),
        )
    return table


@app.command()
def run(
    config: Path = typer.Argument(..., help="Experiment config file (TOML)"),
    trials: int | None = typer.Option(None, "--trials", "-n", help="Trials per sweep value"),
    seed: int | None = typer.Option(None, "--seed", "-s", help="Master seed"),
    output: Path | None = typer.Option(None, "--output", "-o", help="Result CSV path"),
    workers: int | None = typer.Option(None, "--workers", "-w", help="Worker processes"),
    fmt: str = typer.Option("csv", "--format", "-f", help="csv, json, long or all"),
) -> None:
    """Run a Monte Carlo sweep and write its result files."""
    if fmt not in ("csv", "json", "long", "all"):
        raise ConfigurationError(f"Unknown output format: {fmt}", details={"format": fmt})
    spec = apply_overrides(load_experiment_spec(config), n_trials=trials, master_seed=seed)

    settings = get_settings()
    if workers is not None:
        if workers < 1:
            raise ConfigurationError("--workers must be at least 1")
        settings = settings.model_copy(update={"max_workers": workers})
    target = output or Path(settings.output_dir) / f"{spec.name}.csv"

    err_console.print(
        f"Running [cyan]{spec.name}[/cyan]: {len(spec.sweep_values)} points x "
        f"{spec.n_trials} trials, {len(spec.schemes)} schemes"
    )
    with Progress(
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        MofNCompleteColumn(),
        TimeElapsedColumn(),
        console=err_console,
        transient=True,
    ) as progress:
        task = progress.add_task("trials", total=len(spec.sweep_values) * spec.n_trials)
        result = run_experiment(
            spec,
            settings=settings,
            progress=lambda done, total: progress.update(task, completed=done, total=total),
        )

    written = emit_results(
        result.rows, target, fmt=cast(ResultFormat, fmt), metadata=result.metadata
    )

    console.print(_summary_table(spec, result.rows, result.metadata.get("unit", "bits")))
    violations = result.metadata.get("check_violations", {})
    if any(violations.values()):
        console.print(f"[yellow]Check violations: {violations}[/yellow]")
    for path in written:
        console.print(f"Wrote [cyan]{path}[/cyan]")


@app.command()
def validate(
    config: Path = typer.Argument(..., help="Experiment config file (TOML)"),
) -> None:
    """Check a config file against the experiment schema without running it."""
    spec = load_experiment_spec(config)
    points = [spec.scenario_for(value) for value in spec.sweep_values]
    console.print(
        Panel(
            f"[green]{config} is valid[/green]\n"
            f"name: {spec.name}\n"
            f"sweep: {spec.sweep_variable.value} = {', '.join(f'{v:g}' for v in spec.sweep_values)}\n"
            f"trials per point: {spec.n_trials}\n"
            f"schemes: {', '.join(s.value for s in spec.schemes)}\n"
            f"M*R range: {min(p.measurement_count for p in points)}"
            f"..{max(p.measurement_count for p in points)}, K*N_c: {spec.base.total_users}"
        )
    )


@app.command()
def ric(
    kn: int = typer.Option(..., "--kn", help="Total users K*N_c"),
    k: int = typer.Option(..., "--k", help="RIP order"),
    nc: int = typer.Option(4, "--nc", min=1, help="Subcarriers N_c"),
    m: int = typer.Option(4, "--m", min=1, help="RRHs M"),
    r: int | None = typer.Option(None, "--r", help="Measurements per RRH R (default N_c)"),
    seed: int = typer.Option(0, "--seed", help="Master seed"),
    samples: int | None = typer.Option(
        None, "--samples", help="Check this many random supports instead of all"
    ),
    as_json: bool = typer.Option(False, "--json", help="Print JSON instead of a table"),
) -> None:
    """Estimate the restricted isometry constant of one drawn measurement matrix."""
    if kn % nc:
        raise ConfigurationError(
            f"--kn {kn} is not a multiple of --nc {nc}", details={"kn": kn, "nc": nc}
        )
    try:
        cfg = ScenarioConfig(
            num_rrh=m,
            users_per_carrier=kn // nc,
            num_subcarriers=nc,
            num_active=0,
            transmit_snr=1.0,
            num_measurements=r,
            master_seed=seed,
        )
    except ValidationError as e:
        raise ConfigurationError(f"Invalid dimensions: {e}") from e

    streams = RandomStreams.from_seed(cfg.master_seed)
    channel = generate_channel(cfg, generate_geometry(cfg, streams.geometry), streams.channel)
    matrices = generate_compression_matrices(
        cfg.num_rrh, cfg.measurements, cfg.num_subcarriers, streams.compression
    )
    estimate = estimate_ric(
        assemble_theta(channel, matrices), k, samples=samples, rng=streams.signal
    )

    payload = {
        "delta": estimate.delta,
        "order": estimate.order,
        "exhaustive": estimate.exhaustive,
        "supports_checked": estimate.supports_checked,
        "below_limit": estimate.delta < RIP_LIMIT,
    }
    if as_json:
        typer.echo(json.dumps(payload, sort_keys=True))
        return

    table = Table(title=f"RIC of order {k} (M={m}, R={cfg.measurements}, K*N_c={kn})")
    table.add_column("Field", style="cyan")
    table.add_column("Value", justify="right")
    for key, value in payload.items():
        table.add_row(key, f"{value:.6f}" if isinstance(value, float) else str(value))
    console.print(table)


@app.command()
def bounds(
    delta: float | None = typer.Option(None, "--delta", help="RIC delta in [0, sqrt(2)-1)"),
    pr_rip: float = typer.Option(1.0, "--pr-rip", help="Probability the RIP holds"),
    s: int | None = typer.Option(None, "--s", help="Active users s"),
    m: int | None = typer.Option(None, "--m", help="RRHs M"),
    alpha: float | None = typer.Option(None, "--alpha", help="Compression rate R/N_c"),
    p: float | None = typer.Option(None, "--p", help="Transmit SNR P (linear)"),
    nc: int | None = typer.Option(None, "--nc", help="Subcarriers N_c"),
    lam: float | None = typer.Option(None, "--lambda", help="BP threshold lambda"),
    kn: int | None = typer.Option(None, "--kn", help="Total users K*N_c"),
    p_min: float | None = typer.Option(None, "--p-min", help="Weakest received power"),
    log_base: float = typer.Option(2.0, "--log-base", help="Logarithm base of capacities"),
    as_json: bool = typer.Option(False, "--json", help="Print JSON instead of a table"),
) -> None:
    """Evaluate the closed-form detection and capacity bounds."""
    report = evaluate_bounds(
        delta=delta,
        pr_rip=pr_rip,
        num_active=s,
        num_rrh=m,
        alpha=alpha,
        power=p,
        num_subcarriers=nc,
        lam=lam,
        total_users=kn,
        p_min=p_min,
        log_base=log_base,
    )
    values = report.model_dump()
    if as_json:
        typer.echo(json.dumps(values, sort_keys=True))
        return

    table = Table(title="Bounds")
    table.add_column("Quantity", style="cyan")
    table.add_column("Value", justify="right")
    for key, value in values.items():
        if value is not None:
            table.add_row(key, f"{value:.6g}" if isinstance(value, float) else str(value))
    console.print(table)


def cli_main(argv: list[str] | None = None) -> int:
    """Run the CLI and map the outcome to an exit code.

    0 on success, 1 for usage and configuration errors, 2 for runtime errors.
    """
    try:
        code = app(args=argv, prog_name="crancs", standalone_mode=False)
    except click.UsageError as e:
        e.show(file=sys.stderr)
        return 1
    except click.exceptions.Exit as e:
        return e.exit_code
    except click.Abort:
        err_console.print("[red]Aborted[/red]")
        return 1
    except ConfigurationError as e:
        err_console.print(f"[red]Configuration error: {e.message}[/red]")
        for item in e.details.get("errors", []):
            err_console.print(f"  {item['field']}: {item['message']}")
        return 1
    except CranError as e:
        err_console.print(f"[red]Error: {e.message}[/red]")
        return 2
    return code if isinstance(code, int) else 0


def run_cli() -> None:
    """Console-script entry point."""
    sys.exit(cli_main())
