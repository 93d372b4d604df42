"""
Command-line interface for dgla-cert.
"""

from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from src.cocycles.compare import CompareMode
from src.functors.current import Functor
from src.orchestrator.export import ExportFormat, export
from src.orchestrator.main import INPUT_ERRORS, CertificationOrchestrator
from src.orchestrator.registry import Registry
from src.orchestrator.report import TaskRecord
from src.utils.config import CertifyConfig
from src.utils.config_parser import parse_taskfile

app = typer.Typer(
    name="dgla-cert",
    help="Exact certification of dglas, current algebras and their extension cocycles",
)
console = Console()
err_console = Console(stderr=True)

TASKFILE_OPTION = typer.Option(None, "--taskfile", "-t", help="Task file defining extra names")
REPORT_OPTION = typer.Option(None, "--report", "-r", help="Write the JSON report here")
WORKERS_OPTION = typer.Option(None, "--workers", help="Processes for the Jacobi loops")


@contextmanager
def input_errors() -> Iterator[None]:
    """Unknown names, schema problems and rejected constructions exit with code 2."""
    try:
        yield
    except INPUT_ERRORS as e:
        err_console.print(f"[red]✗ Input error: {e}[/red]")
        raise typer.Exit(code=2)
    except ValidationError as e:
        err_console.print(f"[red]✗ Invalid input: {e.errors()[0]['msg']}[/red]")
        raise typer.Exit(code=2)
    except KeyError as e:
        err_console.print(f"[red]✗ Unknown name: {e.args[0] if e.args else e}[/red]")
        raise typer.Exit(code=2)


def _orchestrator(
    taskfile: Optional[Path] = None,
    workers: Optional[int] = None,
    report: Optional[Path] = None,
    timestamp: bool = True,
    quiet: bool = False,
) -> CertificationOrchestrator:
    config = CertifyConfig.from_env(
        workers=workers, report_path=report, include_timestamp=timestamp
    )
    registry = Registry(parse_taskfile(taskfile)) if taskfile else Registry()
    return CertificationOrchestrator(config, registry, quiet=quiet)


def _finish(orchestrator: CertificationOrchestrator, records: list[TaskRecord]) -> None:
    report = orchestrator.report(records)
    orchestrator.print_summary(report)
    orchestrator.save_report(report)
    raise typer.Exit(code=0 if report.passed else 1)


def _exit_for(record: TaskRecord) -> None:
    if not record.passed:
        err_console.print(f"[red]✗ {record.subject}: {record.first_witness()}[/red]")
        raise typer.Exit(code=1)
    raise typer.Exit(code=0)


@app.callback(invoke_without_command=True)
def catalogue(
    ctx: typer.Context,
    fixtures: bool = typer.Option(False, "--fixtures", help="List the shipped catalogue"),
) -> None:
    """
    Certify dglas, CDGA models and the current algebras built from them.

    Names are fixtures (see --fixtures), expressions such as cone(sl2) or
    Cp(sl2), or anything a task file defines.
    """
    if fixtures:
        table = Table(title="Shipped catalogue", show_header=True)
        table.add_column("Kind", style="cyan")
        table.add_column("Names")
        for kind, names in Registry().catalogue().items():
            table.add_row(kind, ", ".join(names))
        console.print(table)
        raise typer.Exit(code=0)
    if ctx.invoked_subcommand is None:
        console.print(ctx.get_help())
        raise typer.Exit(code=0)


@app.command()
def validate(
    name: str = typer.Argument(..., help="Lie algebra, CDGA, g-differential space or dgla"),
    taskfile: Optional[Path] = TASKFILE_OPTION,
    workers: Optional[int] = WORKERS_OPTION,
) -> None:
    """
    Check every axiom of a named structure.

    Exits 1 with the first failing witness, e.g. the Jacobi triple.
    """
    with input_errors():
        orchestrator = _orchestrator(taskfile, workers)
        record = orchestrator.validate(name)
    _exit_for(record)


@app.command()
def build(
    name: str = typer.Argument(..., help="Object to construct and export"),
    taskfile: Optional[Path] = TASKFILE_OPTION,
    fmt: ExportFormat = typer.Option(ExportFormat.JSON, "--format", "-f", help="json or text"),
) -> None:
    """Print the structure-constant table of a named object."""
    with input_errors():
        orchestrator = _orchestrator(taskfile, quiet=True)
        _, document = orchestrator.build(name, fmt)
    typer.echo(document, nl=False)


def _current(
    functor: Functor, model: str, dgla: str, taskfile: Optional[Path], fmt: ExportFormat
) -> None:
    with input_errors():
        orchestrator = _orchestrator(taskfile, quiet=True)
        record, algebra = orchestrator.current(functor, model, dgla)
    typer.echo(export(algebra, fmt), nl=False)
    _exit_for(record)


@app.command()
def ca(
    model: str = typer.Argument(..., help="CDGA model, e.g. Circ"),
    dgla: str = typer.Argument(..., help="dgla, e.g. cone(sl2)"),
    taskfile: Optional[Path] = TASKFILE_OPTION,
    fmt: ExportFormat = typer.Option(ExportFormat.JSON, "--format", "-f", help="json or text"),
) -> None:
    """Compute CA(S, A) with the derived bracket."""
    _current(Functor.CA, model, dgla, taskfile, fmt)


@app.command()
def sa(
    model: str = typer.Argument(..., help="CDGA model, e.g. Circ"),
    dgla: str = typer.Argument(..., help="dgla, e.g. cone(sl2)"),
    taskfile: Optional[Path] = TASKFILE_OPTION,
    fmt: ExportFormat = typer.Option(ExportFormat.JSON, "--format", "-f", help="json or text"),
) -> None:
    """Compute SA(S, A), the closed degree-0 elements."""
    _current(Functor.SA, model, dgla, taskfile, fmt)


@app.command()
def sequence(
    model: str = typer.Argument(..., help="CDGA model"),
    dgla: str = typer.Argument(..., help="dgla"),
    taskfile: Optional[Path] = TASKFILE_OPTION,
) -> None:
    """Certify exactness of 0 → H⁻¹ → CA → SA → H⁰ → 0."""
    with input_errors():
        record = _orchestrator(taskfile).sequence(model, dgla)
    _exit_for(record)


@app.command()
def cohomology(
    target: str = typer.Argument(..., help="dgla, CDGA or Lie algebra"),
    degree: int = typer.Argument(..., help="Cohomological degree"),
    module: str = typer.Option(
        "trivial", "--module", "-m", help="CE coefficients: trivial, adjoint or coadjoint"
    ),
    taskfile: Optional[Path] = TASKFILE_OPTION,
) -> None:
    """
    Cohomology of a complex in one degree.

    For a Lie algebra this is Chevalley–Eilenberg cohomology with the
    chosen coefficients.
    """
    with input_errors():
        orchestrator = _orchestrator(taskfile)
        record = orchestrator.cohomology(target, degree, module)
    console.print(f"dim H^{degree} = {record.result['dimension']}")
    _exit_for(record)


@app.command()
def extract(
    functor: Functor = typer.Argument(..., help="CA or SA"),
    model: str = typer.Argument(..., help="CDGA model"),
    extension: str = typer.Argument(..., help="Extension dgla, e.g. Cgamma(ab2)"),
    taskfile: Optional[Path] = TASKFILE_OPTION,
) -> None:
    """Extract and validate the cocycle of the current extension."""
    with input_errors():
        record = _orchestrator(taskfile).extract(functor, model, extension)
    for u, v, value in record.result["cocycle"]:
        console.print(f"  σ({u}, {v}) = {value}")
    _exit_for(record)


@app.command()
def compare(
    functor: Functor = typer.Argument(..., help="CA or SA"),
    model: str = typer.Argument(..., help="CDGA model"),
    extension: str = typer.Argument(..., help="Extension dgla"),
    mode: CompareMode = typer.Option(
        CompareMode.EXACT, "--mode", help="exact or cohomologous"
    ),
    taskfile: Optional[Path] = TASKFILE_OPTION,
) -> None:
    """Compare the extracted cocycle with its closed forms."""
    with input_errors():
        record = _orchestrator(taskfile).compare(functor, model, extension, mode)
    _exit_for(record)


@app.command()
def certify(
    all_checks: bool = typer.Option(False, "--all", help="Run the full acceptance suite"),
    report: Optional[Path] = REPORT_OPTION,
    no_timestamp: bool = typer.Option(False, "--no-timestamp", help="Omit the report timestamp"),
    workers: Optional[int] = WORKERS_OPTION,
) -> None:
    """
    Run the acceptance suite over the shipped catalogue.

    Examples:
        dgla-cert certify --all
        dgla-cert certify --all --report reports/cert.json --no-timestamp
    """
    if not all_checks:
        err_console.print("[yellow]Nothing to do: pass --all[/yellow]")
        raise typer.Exit(code=2)
    with input_errors():
        orchestrator = _orchestrator(None, workers, report, not no_timestamp)
        records = orchestrator.certify_all()
    _finish(orchestrator, records)


@app.command()
def run(
    taskfile: Path = typer.Argument(..., help="JSON task file"),
    report: Optional[Path] = REPORT_OPTION,
    no_timestamp: bool = typer.Option(False, "--no-timestamp", help="Omit the report timestamp"),
    workers: Optional[int] = WORKERS_OPTION,
) -> None:
    """
    Build, validate and run everything a task file declares.

    Exit codes: 0 all checks passed, 1 a check failed, 2 the task file is
    invalid or names something undefined.
    """
    with input_errors():
        spec = parse_taskfile(taskfile)
        orchestrator = _orchestrator(None, workers, report, not no_timestamp)
        result = orchestrator.run_taskfile(spec)
    _finish(orchestrator, result.records)


@app.command()
def version() -> None:
    """Show version information."""
    console.print("[bold cyan]dgla-cert[/bold cyan]")
    console.print("Version: 0.1.0")


def main() -> None:
    """Main entry point."""
    app()


if __name__ == "__main__":
    main()
