"""
Test the dgla-cert command line.
"""

import json
from pathlib import Path

from typer.testing import CliRunner

from src.cli import app

TASKFILES = Path(__file__).parent.parent / "taskfiles"

runner = CliRunner()


class TestCli:
    """Test commands and exit codes."""

    def test_fixtures(self):
        """Test the catalogue listing."""
        result = runner.invoke(app, ["--fixtures"])
        assert result.exit_code == 0
        assert "lie_algebras" in result.output

    def test_version(self):
        """Test the version command."""
        result = runner.invoke(app, ["version"])
        assert result.exit_code == 0
        assert "0.1.0" in result.output

    def test_validate_pass(self):
        """Test a valid Lie algebra exits 0."""
        assert runner.invoke(app, ["validate", "sl2"]).exit_code == 0

    def test_validate_failure(self):
        """Test a broken definition exits 1."""
        taskfile = str(TASKFILES / "broken_jacobi.json")
        result = runner.invoke(app, ["validate", "heis3_broken", "--taskfile", taskfile])
        assert result.exit_code == 1

    def test_validate_unknown(self):
        """Test an unknown name exits 2."""
        assert runner.invoke(app, ["validate", "so7"]).exit_code == 2

    def test_build_text(self):
        """Test the text export goes to stdout."""
        result = runner.invoke(app, ["build", "sl2", "--format", "text"])
        assert result.exit_code == 0
        assert "[e, f] = h" in result.output

    def test_build_json(self):
        """Test the JSON export parses."""
        result = runner.invoke(app, ["build", "cone(ab2)"])
        assert result.exit_code == 0
        assert json.loads(result.output)["name"] == "cone(ab2)"

    def test_ca(self):
        """Test CA prints the algebra."""
        result = runner.invoke(app, ["ca", "Circ", "cone(sl2)", "--format", "text"])
        assert result.exit_code == 0
        assert "CA(" in result.output

    def test_cohomology(self):
        """Test H² of heis3."""
        result = runner.invoke(app, ["cohomology", "heis3", "2"])
        assert result.exit_code == 0
        assert "dim H^2 = 2" in result.output

    def test_extract(self):
        """Test the extracted cocycle is printed."""
        result = runner.invoke(app, ["extract", "CA", "Intv", "Cgamma(ab2)"])
        assert result.exit_code == 0
        assert "σ(" in result.output

    def test_certify_needs_all(self):
        """Test certify without --all exits 2."""
        assert runner.invoke(app, ["certify"]).exit_code == 2

    def test_run_pass(self, tmp_path):
        """Test the so3 example passes and writes its report."""
        report = tmp_path / "report.json"
        result = runner.invoke(
            app,
            [
                "run",
                str(TASKFILES / "so3_currents.json"),
                "--report",
                str(report),
                "--no-timestamp",
            ],
        )
        assert result.exit_code == 0
        data = json.loads(report.read_text())
        assert data["summary"]["failed"] == 0
        assert "timestamp" not in data

    def test_run_failure(self):
        """Test a failing definition exits 1."""
        result = runner.invoke(app, ["run", str(TASKFILES / "broken_jacobi.json")])
        assert result.exit_code == 1

    def test_run_undefined(self):
        """Test an undefined name exits 2."""
        result = runner.invoke(app, ["run", str(TASKFILES / "undefined_name.json")])
        assert result.exit_code == 2

    def test_run_missing_file(self, tmp_path):
        """Test an unreadable task file exits 2."""
        assert runner.invoke(app, ["run", str(tmp_path / "absent.json")]).exit_code == 2

    def test_malformed_workers_env(self):
        """Test a non-numeric worker count from the environment exits 2."""
        result = runner.invoke(app, ["validate", "sl2"], env={"DGLA_CERT_WORKERS": "two"})
        assert result.exit_code == 2

    def test_sa_help_says_closed(self):
        """Test the sa command describes SA by closed elements."""
        result = runner.invoke(app, ["sa", "--help"])
        assert "closed degree-0" in result.output


class TestCertifyAll:
    """Test the full acceptance suite from the command line."""

    def test_reports_are_identical(self, tmp_path):
        """Test two timestamp-free runs pass and write the same bytes."""
        reports = [tmp_path / "first.json", tmp_path / "second.json"]
        for report in reports:
            result = runner.invoke(
                app, ["certify", "--all", "--no-timestamp", "--report", str(report)]
            )
            assert result.exit_code == 0, result.output
        assert reports[0].read_bytes() == reports[1].read_bytes()
        data = json.loads(reports[0].read_text())
        assert data["summary"]["failed"] == 0
        assert data["summary"]["line"].startswith("PASS")
