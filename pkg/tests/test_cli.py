"""Tests for the command-line interface."""

import json
import math
from pathlib import Path

import pytest
from typer.testing import CliRunner

from crancs import __version__
from crancs.cli import app, cli_main
from crancs.harness.results import CSV_HEADER, parse_results

from .conftest import CONFIG_DIR

runner = CliRunner()


class TestExitCodes:
    """Tests for the exit-code mapping."""

    def test_version(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test --version prints and exits cleanly."""
        assert cli_main(["--version"]) == 0
        assert __version__ in capsys.readouterr().out

    def test_unknown_flag(self) -> None:
        """Test usage errors exit with 1."""
        assert cli_main(["bounds", "--no-such-flag"]) == 1

    def test_missing_config(self, tmp_path: Path) -> None:
        """Test an unreadable config exits with 1."""
        assert cli_main(["validate", str(tmp_path / "absent.toml")]) == 1

    def test_bound_outside_hypothesis(self) -> None:
        """Test δ beyond √2 − 1 is a runtime error with exit code 2."""
        assert cli_main(["bounds", "--delta", "0.5"]) == 2

    def test_bad_format(self, tmp_path: Path, tiny_config_text: str) -> None:
        """Test an unknown output format is a configuration error."""
        path = tmp_path / "tiny.toml"
        path.write_text(tiny_config_text)
        assert cli_main(["run", str(path), "--format", "xml"]) == 1

    def test_ric_dimension_mismatch(self) -> None:
        """Test K·N_c not divisible by N_c is refused."""
        assert cli_main(["ric", "--kn", "7", "--nc", "4", "--k", "1"]) == 1


class TestValidate:
    """Tests for the validate command."""

    def test_checked_in_config(self) -> None:
        """Test a shipped config passes."""
        result = runner.invoke(app, ["validate", str(CONFIG_DIR / "d1_fig6.toml")])
        assert result.exit_code == 0
        assert "is valid" in result.output
        assert "num_active" in result.output


class TestBounds:
    """Tests for the bounds command."""

    def test_degenerate_bounds_coincide(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test δ = 0 and Pr_RIP = 1 give lower = upper = s·log2(1 + MαP)."""
        code = cli_main(
            [
                "bounds", "--delta", "0", "--pr-rip", "1", "--s", "1", "--m", "1",
                "--alpha", "1", "--p", "1", "--json",
            ]
        )
        assert code == 0
        values = json.loads(capsys.readouterr().out)
        assert values["thm4_lower"] == pytest.approx(1.0)
        assert values["thm4_upper"] == pytest.approx(1.0)
        assert values["c2"] == pytest.approx(4.0)

    def test_table_output(self) -> None:
        """Test the default rendering lists only evaluated quantities."""
        result = runner.invoke(app, ["bounds", "--delta", "0.2"])
        assert result.exit_code == 0
        assert "c2" in result.output
        assert "thm4_upper" not in result.output


class TestRic:
    """Tests for the ric command."""

    def test_exhaustive_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Test a small matrix is checked over every support."""
        assert cli_main(["ric", "--kn", "8", "--nc", "4", "--m", "2", "--k", "2", "--json"]) == 0
        payload = json.loads(capsys.readouterr().out)
        assert payload["order"] == 2
        assert payload["exhaustive"] is True
        assert payload["supports_checked"] == math.comb(8, 2)
        assert payload["delta"] >= 0.0


class TestRun:
    """Tests for the run command."""

    def test_writes_results(self, tmp_path: Path, tiny_config_text: str) -> None:
        """Test a tiny sweep runs end to end and writes every format."""
        config = tmp_path / "tiny.toml"
        config.write_text(tiny_config_text)
        output = tmp_path / "out" / "tiny.csv"
        code = cli_main(
            ["run", str(config), "--output", str(output), "--workers", "1", "--format", "all"]
        )
        assert code == 0
        assert output.exists()
        assert output.read_text().splitlines()[0] == ",".join(CSV_HEADER)
        assert len(parse_results(output)) == 4
        assert (tmp_path / "out" / "tiny.json").exists()
        assert "bound" in (tmp_path / "out" / "tiny_long.csv").read_text()

    def test_overrides_apply(self, tmp_path: Path, tiny_config_text: str) -> None:
        """Test --trials reaches the sweep."""
        config = tmp_path / "tiny.toml"
        config.write_text(tiny_config_text)
        output = tmp_path / "tiny.csv"
        code = cli_main(
            [
                "run", str(config), "--output", str(output), "--workers", "1",
                "--trials", "1", "--seed", "3", "--format", "json",
            ]
        )
        assert code == 0
        payload = json.loads((tmp_path / "tiny.json").read_text())
        assert payload["metadata"]["config"]["n_trials"] == 1
        assert payload["metadata"]["config"]["base"]["master_seed"] == 3
        assert not output.exists()
