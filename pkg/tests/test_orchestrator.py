"""
Test the certification orchestrator, task files and the acceptance phases.
"""

import json
from pathlib import Path

import pytest

from src.cocycles.compare import CompareMode
from src.constructions import fixtures
from src.dgla.errors import ConstructionRejected, TaskFileError
from src.functors.current import Functor
from src.orchestrator.export import ExportFormat
from src.orchestrator.main import CertificationOrchestrator
from src.orchestrator.suite import AcceptanceSuite
from src.utils.config import CertifyConfig
from src.utils.config_parser import parse_taskfile, parse_taskfile_data

TASKFILES = Path(__file__).parent.parent / "taskfiles"


@pytest.fixture
def orchestrator():
    return CertificationOrchestrator(CertifyConfig(include_timestamp=False), quiet=True)


class TestTasks:
    """Test single tasks on catalogue names."""

    def test_validate(self, orchestrator):
        """Test a valid and a perturbed dgla."""
        assert orchestrator.validate("cone(sl2)").passed
        record = orchestrator.validate("cone(sl2)~")
        assert not record.passed
        assert record.first_witness().startswith("jacobi")

    def test_validate_size_limit(self):
        """Test dglas above the configured size are refused."""
        config = CertifyConfig(include_timestamp=False, max_validation_dim=4)
        orchestrator = CertificationOrchestrator(config, quiet=True)
        with pytest.raises(ConstructionRejected, match="too large"):
            orchestrator.validate("cone(sl2)")

    def test_build(self, orchestrator):
        """Test build returns the export and records the table."""
        record, document = orchestrator.build("sl2", ExportFormat.TEXT)
        assert record.passed
        assert "[e, f] = h" in document

    def test_current(self, orchestrator):
        """Test the CA task records the dimension."""
        record, algebra = orchestrator.current(Functor.CA, "Circ", "cone(sl2)")
        assert record.passed
        assert record.result["dim"] == algebra.dim == 3

    def test_sequence(self, orchestrator):
        """Test the sequence task records the dimension table."""
        record = orchestrator.sequence("Circ", "cone(sl2)")
        assert record.passed
        assert record.result["dims"]["CA"] == 3

    @pytest.mark.parametrize(
        "target,degree,module,expected",
        [
            ("heis3", 2, "trivial", 2),
            ("ab2", 1, "coadjoint", 4),
            ("Circ", 1, "trivial", 1),
            ("cone(sl2)", 0, "trivial", 0),
        ],
    )
    def test_cohomology(self, orchestrator, target, degree, module, expected):
        """Test CE cohomology of Lie algebras and cohomology of complexes."""
        record = orchestrator.cohomology(target, degree, module)
        assert record.result["dimension"] == expected

    def test_extract_and_compare(self, orchestrator):
        """Test cocycle tasks on C_γ ab2 and C_p sl2."""
        record = orchestrator.extract(Functor.CA, "Intv", "Cgamma(ab2)")
        assert record.passed
        assert record.result["cocycle"]
        record = orchestrator.compare(Functor.SA, "Sq", "Cp(sl2)", CompareMode.COHOMOLOGOUS)
        assert record.passed
        assert record.inputs["mode"] == "cohomologous"


class TestTaskFiles:
    """Test whole task files."""

    def test_so3(self, orchestrator):
        """Test the so3 example passes every definition and task."""
        report = orchestrator.run_taskfile(parse_taskfile(TASKFILES / "so3_currents.json"))
        assert report.passed, [r.first_witness() for r in report.failed]
        assert len(report.records) == 3 + 8
        assert report.timestamp is None

    def test_broken_definition_skips_tasks(self, orchestrator):
        """Test a failing Jacobi identity stops before the tasks."""
        report = orchestrator.run_taskfile(parse_taskfile(TASKFILES / "broken_jacobi.json"))
        assert not report.passed
        assert len(report.records) == 1
        assert "Jacobi" in report.records[0].first_witness()

    def test_undefined_name(self, orchestrator):
        """Test an undefined Lie algebra is located in the builds."""
        with pytest.raises(TaskFileError) as excinfo:
            orchestrator.run_taskfile(parse_taskfile(TASKFILES / "undefined_name.json"))
        assert excinfo.value.location == "builds.0.lie"

    def test_task_error_is_located(self, orchestrator):
        """Test a task naming an unknown dgla is located at the task."""
        spec = parse_taskfile_data(
            {"schema_version": "1", "tasks": [{"kind": "ca", "model": "Circ", "dgla": "nope"}]}
        )
        with pytest.raises(TaskFileError) as excinfo:
            orchestrator.run_taskfile(spec)
        assert excinfo.value.location == "tasks.0"

    def test_oversized_definition_is_located(self):
        """Test a build too large to validate is reported at its builds entry."""
        config = CertifyConfig(include_timestamp=False, max_validation_dim=4)
        orchestrator = CertificationOrchestrator(config, quiet=True)
        with pytest.raises(TaskFileError, match="too large") as excinfo:
            orchestrator.run_taskfile(parse_taskfile(TASKFILES / "so3_currents.json"))
        assert excinfo.value.location == "builds.0"


class TestReport:
    """Test report rendering and saving."""

    def test_save_report(self, orchestrator, tmp_path):
        """Test the saved report carries records and a summary."""
        records = [orchestrator.validate("sl2"), orchestrator.validate("cone(sl2)~")]
        report = orchestrator.report(records)
        path = orchestrator.save_report(report, tmp_path / "reports" / "cert.json")
        data = json.loads(path.read_text())
        assert data["summary"]["total"] == 2
        assert data["summary"]["failed"] == 1
        assert data["summary"]["line"] == "FAIL: 1/2 tasks passed"
        assert "timestamp" not in data

    def test_timestamp(self):
        """Test the timestamp is added when configured."""
        orchestrator = CertificationOrchestrator(CertifyConfig(), quiet=True)
        assert orchestrator.report([]).timestamp

    def test_no_path_no_file(self, orchestrator):
        """Test nothing is written without a report path."""
        assert orchestrator.save_report(orchestrator.report([])) is None

    def test_render_is_deterministic(self, orchestrator):
        """Test two identical runs render identically without timestamps."""
        first = orchestrator.report([orchestrator.validate("sl2")]).render()
        second = orchestrator.report([orchestrator.validate("sl2")]).render()
        assert first == second


class TestAcceptancePhases:
    """Test the cheaper acceptance phases on their own."""

    @pytest.mark.parametrize(
        "phase", ["perturbations", "functoriality", "lie_cohomology", "rejections"]
    )
    def test_phase_passes(self, orchestrator, phase):
        """Test every record of the phase passes."""
        suite = AcceptanceSuite(orchestrator)
        getattr(suite, phase)()
        assert suite.records
        assert all(record.passed for record in suite.records)

    def test_identifications_cover_the_grid(self, orchestrator):
        """Test every (model, Lie algebra) pair of the catalogue is identified."""
        suite = AcceptanceSuite(orchestrator)
        suite.identifications()
        pairs = {(r.inputs["model"], r.inputs["lie"]) for r in suite.records}
        assert pairs == {(s, g) for s in fixtures.CDGA_FIXTURES for g in fixtures.LIE_FIXTURES}
        assert all(record.passed for record in suite.records)

    def test_validators_cover_every_gdiff_space(self, orchestrator):
        """Test the sigma-model action and each dual cone module are validated."""
        suite = AcceptanceSuite(orchestrator)
        suite.validators()
        targets = {record.inputs["target"] for record in suite.records}
        assert {f"dualcone({g})" for g in fixtures.LIE_FIXTURES} <= targets
        assert "T3" in targets
        assert all(record.passed for record in suite.records)
