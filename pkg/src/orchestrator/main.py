"""
Certification orchestrator.
Runs validation, current-algebra, sequence, cohomology and cocycle tasks
against named objects and collects the results into a JSON report.
"""

from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Optional

from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from src.cocycles.cases import run_case
from src.cocycles.chevalley import Representation, ce_cohomology
from src.cocycles.compare import CompareMode
from src.dgla.cdga import Cdga, validate_cdga
from src.dgla.certificate import Certificate
from src.dgla.cohomology import cohomology
from src.dgla.dgla import Dgla, validate_dgla
from src.dgla.errors import (
    ConstructionRejected,
    DegreeError,
    InternalConsistencyError,
    NonAcyclicQuotient,
    TaskFileError,
)
from src.dgla.gdiff import GDiffSpace, validate_gdiff
from src.dgla.lie import LieAlgebra, validate_lie
from src.functors.current import CurrentAlgebra, Functor, ca, sa, validate_current
from src.functors.sequence import four_term_sequence
from src.orchestrator.export import ExportFormat, export, to_document
from src.orchestrator.registry import Registry
from src.orchestrator.report import Report, TaskRecord
from src.orchestrator.suite import AcceptanceSuite
from src.utils.config import CertifyConfig, ReportConfig
from src.utils.config_parser import TaskFile, TaskKind, TaskSpec

console = Console()

INPUT_ERRORS = (TaskFileError, ConstructionRejected, DegreeError, NonAcyclicQuotient)


class CertificationOrchestrator:
    """
    Runs certification tasks.

    Tasks run sequentially in the order given; the exhaustive Jacobi loop
    of the dgla validator honours ``config.workers``.
    """

    def __init__(
        self,
        config: Optional[CertifyConfig] = None,
        registry: Optional[Registry] = None,
        report_config: Optional[ReportConfig] = None,
        quiet: bool = False,
    ):
        """
        Initialize the orchestrator.

        Args:
            config: Worker count, report path and timestamp settings
            registry: Name registry (fixtures only when omitted)
            report_config: JSON rendering options
            quiet: Suppress console output
        """
        self.config = config or CertifyConfig()
        self.registry = registry or Registry()
        self.report_config = report_config or ReportConfig()
        self.quiet = quiet

    # Console

    def say(self, message: Any) -> None:
        if not self.quiet:
            console.print(message)

    def record(self, record: TaskRecord) -> TaskRecord:
        if record.passed:
            self.say(f"[green]✓ {record.subject}[/green]")
            if self.report_config.show_passed_checks:
                for check in record.certificate.checks:
                    self.say(f"    {check.name} ({check.checked} checked)")
        else:
            self.say(f"[red]✗ {record.subject}: {record.first_witness()}[/red]")
        return record

    # Tasks

    def validate(self, name: str) -> TaskRecord:
        obj = self.registry.resolve(name)
        return self.record(self.validate_object(obj, name))

    def validate_object(self, obj: Any, name: str) -> TaskRecord:
        if isinstance(obj, LieAlgebra):
            kind, cert = "lie_algebra", validate_lie(obj)
        elif isinstance(obj, Cdga):
            kind, cert = "cdga", validate_cdga(obj)
        elif isinstance(obj, GDiffSpace):
            kind, cert = "gdiff_space", validate_gdiff(obj)
        elif isinstance(obj, Dgla):
            if obj.dim > self.config.max_validation_dim:
                raise ConstructionRejected(
                    "dgla too large for exhaustive validation",
                    f"dim {obj.dim} > {self.config.max_validation_dim}",
                )
            kind, cert = "dgla", validate_dgla(obj, self.config.workers)
        else:
            raise TaskFileError(f"{name!r} cannot be validated", "target")
        dim = obj.dim if isinstance(obj, LieAlgebra) else obj.space.dim
        result = {"kind": kind, "dim": dim}
        return TaskRecord("validate", f"validate {name}", {"target": name}, result, cert)

    def build(self, name: str, fmt: ExportFormat = ExportFormat.JSON) -> tuple[TaskRecord, str]:
        obj = self.registry.resolve(name)
        document = export(obj, fmt)
        cert = Certificate(f"build {name}")
        record = TaskRecord("build", f"build {name}", {"target": name}, to_document(obj), cert)
        return self.record(record), document

    def current(
        self, functor: Functor, model: str, dgla: str
    ) -> tuple[TaskRecord, CurrentAlgebra]:
        s = self.registry.cdga(model, "model")
        a = self.registry.dgla(dgla, "dgla")
        algebra = ca(s, a) if functor is Functor.CA else sa(s, a)
        cert = validate_current(algebra)
        result = {"dim": algebra.dim, "algebra": algebra.to_json()}
        inputs = {"functor": functor.value, "model": model, "dgla": dgla}
        record = TaskRecord(functor.value.lower(), f"{algebra.name}", inputs, result, cert)
        return self.record(record), algebra

    def sequence(self, model: str, dgla: str) -> TaskRecord:
        s = self.registry.cdga(model, "model")
        a = self.registry.dgla(dgla, "dgla")
        exactness = four_term_sequence(s, a)
        result = {"dims": exactness.dims, "ranks": exactness.ranks}
        inputs = {"model": model, "dgla": dgla}
        return self.record(
            TaskRecord("sequence", exactness.subject, inputs, result, exactness.certificate)
        )

    def cohomology(self, target: str, degree: int, module: str = "trivial") -> TaskRecord:
        """H^degree of a complex, or Chevalley–Eilenberg H^degree of a Lie algebra."""
        obj = self.registry.resolve(target)
        cert = Certificate(f"H^{degree}({target})")
        if isinstance(obj, LieAlgebra):
            reps = {
                "trivial": Representation.trivial,
                "adjoint": Representation.adjoint,
                "coadjoint": Representation.coadjoint,
            }
            if module not in reps:
                raise TaskFileError(f"unknown module {module!r}", "module")
            report = ce_cohomology(obj, reps[module](obj), degree)
        else:
            space, d = obj.space, obj.differential
            report = cohomology(space, d, degree)
            cert.add("d_squared", None, len(space.in_degree(degree)))
        inputs = {"target": target, "degree": degree, "module": module}
        return self.record(TaskRecord("cohomology", cert.subject, inputs, report.to_json(), cert))

    def extract(self, functor: Functor, model: str, extension: str) -> TaskRecord:
        return self._cocycle_task("extract", functor, model, extension, compare=False)

    def compare(
        self,
        functor: Functor,
        model: str,
        extension: str,
        mode: CompareMode = CompareMode.EXACT,
    ) -> TaskRecord:
        return self._cocycle_task("compare", functor, model, extension, True, mode)

    def _cocycle_task(
        self,
        task: str,
        functor: Functor,
        model: str,
        extension: str,
        compare: bool,
        mode: CompareMode = CompareMode.EXACT,
    ) -> TaskRecord:
        s = self.registry.cdga(model, "model")
        case = self.registry.case(extension, "extension")
        outcome = run_case(case, functor, s, mode, compare)
        inputs = {"functor": functor.value, "model": model, "extension": extension}
        if compare:
            inputs["mode"] = mode.value
        subject = f"{task} {functor.value}({model}, {extension})"
        record = TaskRecord(task, subject, inputs, outcome.to_json(), outcome.certificate)
        return self.record(record)

    def certify_all(self) -> list[TaskRecord]:
        return AcceptanceSuite(self).run()

    # Task files

    def run_task(self, spec: TaskSpec) -> list[TaskRecord]:
        functor = Functor(spec.functor)
        if spec.kind is TaskKind.VALIDATE:
            return [self.validate(spec.target or "")]
        if spec.kind in (TaskKind.CA, TaskKind.SA):
            which = Functor.CA if spec.kind is TaskKind.CA else Functor.SA
            return [self.current(which, spec.model or "", spec.dgla or "")[0]]
        if spec.kind is TaskKind.SEQUENCE:
            return [self.sequence(spec.model or "", spec.dgla or "")]
        if spec.kind is TaskKind.COHOMOLOGY:
            return [self.cohomology(spec.target or "", spec.degree, spec.module)]
        if spec.kind is TaskKind.EXTRACT:
            return [self.extract(functor, spec.model or "", spec.dgla or "")]
        if spec.kind is TaskKind.COMPARE:
            mode = CompareMode(spec.mode)
            return [self.compare(functor, spec.model or "", spec.dgla or "", mode)]
        return self.certify_all()

    def run_taskfile(self, taskfile: TaskFile) -> Report:
        """
        Build every definition, validate it, then run the tasks in order.

        Raises:
            TaskFileError: unresolved names or rejected constructions, with location
        """
        self.registry.load(taskfile)
        self.say(Panel.fit("[bold]dgla-cert[/bold]\nTask file certification", border_style="blue"))

        self.say("\n[bold]Phase 1: Validating definitions[/bold]")
        records = []
        for name, obj in self.registry.defined():
            try:
                records.append(self.record(self.validate_object(obj, name)))
            except ConstructionRejected as e:
                raise TaskFileError(str(e), self.registry.locations.get(name, name)) from e
        if not all(record.passed for record in records):
            self.say("[yellow]Definitions failed validation; tasks skipped[/yellow]")
            return self.report(records)

        self.say("\n[bold]Phase 2: Running tasks[/bold]")
        for i, spec in enumerate(taskfile.tasks):
            try:
                records.extend(self.run_task(spec))
            except INPUT_ERRORS as e:
                raise TaskFileError(str(e), f"tasks.{i}") from e
            except InternalConsistencyError as e:
                cert = Certificate(f"task {i}")
                cert.add("internal_consistency", str(e), 1)
                records.append(self.record(TaskRecord(spec.kind.value, cert.subject, {}, {}, cert)))
        return self.report(records)

    # Reporting

    def report(self, records: list[TaskRecord]) -> Report:
        timestamp = None
        if self.config.include_timestamp:
            timestamp = datetime.now(timezone.utc).isoformat()
        return Report(records, timestamp)

    def print_summary(self, report: Report) -> None:
        table = Table(title="Certification Summary", show_header=True)
        table.add_column("Task", style="cyan")
        table.add_column("Subject")
        table.add_column("Status")
        for record in report.records:
            status = "[green]PASS[/green]" if record.passed else "[red]FAIL[/red]"
            table.add_row(record.task, record.subject, status)
        self.say("\n")
        self.say(table)
        color = "green" if report.passed else "red"
        self.say(f"\n[bold {color}]{report.summary_line()}[/bold {color}]")

    def save_report(self, report: Report, path: Optional[Path] = None) -> Optional[Path]:
        """Write the JSON report to ``path`` (or the configured report path)."""
        output_path = path or self.config.report_path
        if output_path is None:
            return None
        output_path = Path(output_path)
        output_path.parent.mkdir(parents=True, exist_ok=True)
        output_path.write_text(report.render(self.report_config), encoding="utf-8")
        self.say(f"\n[green]Report saved to: {output_path}[/green]")
        return output_path
