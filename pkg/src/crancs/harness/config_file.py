"""TOML experiment files.

Layout::

    schema_version = 1
    name = "d1_fig6"

    [scenario]   # ScenarioConfig fields (transmit_snr_db / quantization_bits accepted)
    [sweep]      # variable, values
    [run]        # n_trials, schemes
    [solver]     # SolverConfig fields
    [bounds]     # BoundOverlayConfig fields
"""

import tomllib
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from crancs.core.exceptions import ConfigurationError
from crancs.models.experiment import SCHEMA_VERSION, ExperimentSpec

KNOWN_TABLES = {"scenario", "sweep", "run", "solver", "bounds"}
KNOWN_KEYS = {"schema_version", "name"} | KNOWN_TABLES


def _validation_details(error: ValidationError) -> dict[str, Any]:
    return {
        "errors": [
            {"field": ".".join(str(p) for p in err["loc"]), "message": err["msg"]}
            for err in error.errors()
        ]
    }


def spec_from_document(document: dict[str, Any]) -> ExperimentSpec:
    """Build an ExperimentSpec from a parsed config document."""
    unknown = set(document) - KNOWN_KEYS
    if unknown:
        raise ConfigurationError(
            "Unknown top-level keys in config",
            details={"keys": sorted(unknown)},
        )
    for table in KNOWN_TABLES & set(document):
        if not isinstance(document[table], dict):
            raise ConfigurationError(f"[{table}] must be a table")

    sweep = document.get("sweep", {})
    run = document.get("run", {})
    payload: dict[str, Any] = {
        "schema_version": document.get("schema_version", SCHEMA_VERSION),
        "base": document.get("scenario", {}),
        "sweep_variable": sweep.get("variable"),
        "sweep_values": sweep.get("values"),
        "n_trials": run.get("n_trials"),
        "solver": document.get("solver", {}),
        "bound_overlays": document.get("bounds", {}),
    }
    if "name" in document:
        payload["name"] = document["name"]
    if "schemes" in run:
        payload["schemes"] = run["schemes"]

    try:
        return ExperimentSpec.model_validate(payload)
    except ValidationError as e:
        raise ConfigurationError(
            f"Invalid experiment config: {e.error_count()} error(s)",
            details=_validation_details(e),
        ) from e


def load_experiment_spec(path: str | Path) -> ExperimentSpec:
    """Parse and validate a TOML experiment file.

    Raises:
        ConfigurationError: unreadable file, TOML syntax error or schema violation
    """
    source = Path(path)
    try:
        with source.open("rb") as handle:
            document = tomllib.load(handle)
    except OSError as e:
        raise ConfigurationError(
            f"Cannot read config file: {e}", details={"path": str(source)}
        ) from e
    except tomllib.TOMLDecodeError as e:
        raise ConfigurationError(
            f"Config file is not valid TOML: {e}", details={"path": str(source)}
        ) from e
    return spec_from_document(document)


def apply_overrides(
    spec: ExperimentSpec,
    *,
    n_trials: int | None = None,
    master_seed: int | None = None,
) -> ExperimentSpec:
    """Command-line values win over the config file."""
    data = spec.model_dump()
    if n_trials is not None:
        data["n_trials"] = n_trials
    if master_seed is not None:
        data["base"]["master_seed"] = master_seed
    try:
        return ExperimentSpec.model_validate(data)
    except ValidationError as e:
        raise ConfigurationError(
            "Invalid command-line override",
            details=_validation_details(e),
        ) from e
