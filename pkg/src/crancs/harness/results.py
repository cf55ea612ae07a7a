"""Result files: fixed-header CSV, JSON with metadata, and a long-format table."""

import csv
import json
from collections.abc import Sequence
from pathlib import Path
from typing import Any, Literal

from crancs.core.exceptions import ResultIOError
from crancs.core.logging import get_logger
from crancs.models.experiment import ResultRow, Scheme

logger = get_logger(__name__)

CSV_HEADER = ("sweep_value", "scheme", "mean_tput", "ci", "detection_rate", "invalid", "wall_ms")
LONG_HEADER = ("sweep_variable", "sweep_value", "scheme", "metric", "value")

ResultFormat = Literal["csv", "json", "long", "all"]


def _csv_record(row: ResultRow) -> list[str]:
    return [
        repr(float(row.sweep_value)),
        row.scheme.value,
        repr(float(row.mean_per_active_user_throughput)),
        repr(float(row.ci_halfwidth)),
        repr(float(row.detection_rate)),
        str(row.invalid_trials),
        repr(float(row.wall_time_ms)),
    ]


def _write(path: Path, writer: Any) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as handle:
            writer(handle)
    except OSError as e:
        raise ResultIOError(
            f"Failed to write results: {e}",
            details={"path": str(path)},
        ) from e


def write_csv(rows: Sequence[ResultRow], path: Path) -> Path:
    def _emit(handle: Any) -> None:
        out = csv.writer(handle, lineterminator="\n")
        out.writerow(CSV_HEADER)
        out.writerows(_csv_record(row) for row in rows)

    _write(path, _emit)
    return path


def write_json(rows: Sequence[ResultRow], path: Path, metadata: dict[str, Any]) -> Path:
    payload = {
        "metadata": metadata,
        "rows": [row.model_dump(mode="json") for row in rows],
    }

    def _emit(handle: Any) -> None:
        handle.write(json.dumps(payload, indent=2, sort_keys=True))
        handle.write("\n")

    _write(path, _emit)
    return path


def write_long(rows: Sequence[ResultRow], path: Path, metadata: dict[str, Any]) -> Path:
    """One (sweep value, scheme, metric) per line, theory curves as scheme ``bound``."""
    variable = str(metadata.get("sweep_variable", ""))

    def _emit(handle: Any) -> None:
        out = csv.writer(handle, lineterminator="\n")
        out.writerow(LONG_HEADER)
        for row in rows:
            record = _csv_record(row)
            for metric, value in zip(CSV_HEADER[2:], record[2:], strict=True):
                out.writerow([variable, record[0], record[1], metric, value])
        for point in metadata.get("bound_overlays", []):
            for metric, value in sorted(point.items()):
                if metric == "sweep_value":
                    continue
                out.writerow(
                    [variable, repr(float(point["sweep_value"])), "bound", metric, repr(value)]
                )

    _write(path, _emit)
    return path


def emit_results(
    rows: Sequence[ResultRow],
    path: str | Path,
    fmt: ResultFormat = "csv",
    metadata: dict[str, Any] | None = None,
) -> list[Path]:
    """Write the requested formats next to ``path``; returns the files written.

    ``path`` names the CSV; JSON goes to ``<stem>.json`` and the long table to
    ``<stem>_long.csv``.
    """
    if not rows:
        raise ResultIOError("No result rows to emit", details={"path": str(path)})
    base = Path(path)
    metadata = metadata or {}
    csv_path = base.with_suffix(".csv")

    written: list[Path] = []
    if fmt in ("csv", "all"):
        written.append(write_csv(rows, csv_path))
    if fmt in ("json", "all"):
        written.append(write_json(rows, base.with_suffix(".json"), metadata))
    if fmt in ("long", "all"):
        written.append(write_long(rows, base.with_name(f"{base.stem}_long.csv"), metadata))

    logger.info("Results written", files=[str(p) for p in written])
    return written


def parse_results(path: str | Path) -> list[ResultRow]:
    """Read a CSV written by ``emit_results`` back into rows."""
    source = Path(path)
    try:
        with source.open(encoding="utf-8", newline="") as handle:
            reader = csv.reader(handle)
            header = next(reader, None)
            if header is None or tuple(header) != CSV_HEADER:
                raise ResultIOError(
                    "Unexpected result header",
                    details={"path": str(source), "header": header},
                )
            return [
                ResultRow(
                    sweep_value=float(rec[0]),
                    scheme=Scheme(rec[1]),
                    mean_per_active_user_throughput=float(rec[2]),
                    ci_halfwidth=float(rec[3]),
                    detection_rate=float(rec[4]),
                    invalid_trials=int(rec[5]),
                    wall_time_ms=float(rec[6]),
                )
                for rec in reader
            ]
    except OSError as e:
        raise ResultIOError(
            f"Failed to read results: {e}",
            details={"path": str(source)},
        ) from e
