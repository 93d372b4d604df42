"""
Parse certification task files.

A task file is a JSON document declaring Lie algebras, CDGA models,
𝔤-differential spaces, cocycle data, named builds and an ordered list of
tasks. Scalars are "p/q" strings (integers are accepted as well).
"""

import json
from enum import Enum
from pathlib import Path
from typing import Any, Optional, Union

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from src.dgla.errors import TaskFileError
from src.linalg.vector import to_scalar

SCHEMA_VERSION = "1"

Scalar = Union[int, str]


def _check_scalar(value: Scalar) -> Scalar:
    try:
        to_scalar(value)
    except (TypeError, ValueError, ZeroDivisionError):
        raise ValueError(f"{value!r} is not an exact scalar (use an integer or a 'p/q' string)")
    return value


class LieAlgebraSpec(BaseModel):
    """Structure constants as [x, y, z, c] meaning [x, y] ∋ c·z."""

    name: str
    basis: list[str]
    brackets: list[tuple[str, str, str, Scalar]] = []
    matrices: Optional[dict[str, list[list[Scalar]]]] = None

    @field_validator("brackets")
    @classmethod
    def _scalars(cls, value: list) -> list:
        for entry in value:
            _check_scalar(entry[3])
        return value


class CdgaSpec(BaseModel):
    """Products [a, b, c, value] of non-unit elements and differential [target, source, value]."""

    name: str
    basis: list[tuple[str, int]]
    unit: str = "1"
    products: list[tuple[str, str, str, Scalar]] = []
    differential: list[tuple[str, str, Scalar]] = []


class GDiffSpec(BaseModel):
    """Exterior-algebra model with contractions I(x)a = pairing[x][a]."""

    name: str
    cdga: str
    lie: str
    contractions: dict[str, dict[str, Scalar]] = {}
    shift: int = 0


class CocycleKindName(str, Enum):
    RHO = "rho"
    GAMMA = "gamma"
    P = "p"
    ALPHA = "alpha"
    P3 = "p3"
    ELEMENT = "element"
    OMEGA_DELTA = "omega_delta"


class CocycleDataSpec(BaseModel):
    """
    Named cocycle datum. ``entries`` are [x, y, value] (or [x, y, z, value]
    for p3); ``element`` is a vector for e or H; ``omega``/``delta`` give
    [a, b, target, value] and [source, target, value] over cone and module labels.
    """

    name: str
    kind: CocycleKindName
    lie: Optional[str] = None
    entries: list[list[Any]] = []
    default: bool = False
    element: dict[str, Scalar] = {}
    omega: list[tuple[str, str, str, Scalar]] = []
    delta: list[tuple[str, str, Scalar]] = []

    @model_validator(mode="after")
    def _needs_lie(self) -> "CocycleDataSpec":
        if self.kind not in (CocycleKindName.ELEMENT, CocycleKindName.OMEGA_DELTA) and not self.lie:
            raise ValueError(f"cocycle datum of kind {self.kind.value} needs a Lie algebra")
        return self


class Constructor(str, Enum):
    CONE = "cone"
    CENTRAL = "central_extension"
    ALPHA = "alpha_extension"
    SEMIDIRECT = "semidirect"
    E_DEFORMATION = "e_deformation"
    FMS = "fms"
    FMS_CENTRAL = "fms_central"
    SIGMA = "sigma"


class BuildSpec(BaseModel):
    """Named constructor invocation."""

    name: str
    constructor: Constructor
    lie: Optional[str] = None
    cocycle: Optional[str] = None
    module: Optional[str] = None
    element: Optional[str] = None
    k: int = 1


class TaskKind(str, Enum):
    VALIDATE = "validate"
    CA = "ca"
    SA = "sa"
    SEQUENCE = "sequence"
    COHOMOLOGY = "cohomology"
    EXTRACT = "extract"
    COMPARE = "compare"
    CERTIFY = "certify"


class TaskSpec(BaseModel):
    kind: TaskKind
    target: Optional[str] = None
    model: Optional[str] = None
    dgla: Optional[str] = None
    functor: str = "CA"
    degree: int = 0
    mode: str = "exact"
    module: str = "trivial"

    @model_validator(mode="after")
    def _arguments(self) -> "TaskSpec":
        needs = {
            TaskKind.VALIDATE: ("target",),
            TaskKind.CA: ("model", "dgla"),
            TaskKind.SA: ("model", "dgla"),
            TaskKind.SEQUENCE: ("model", "dgla"),
            TaskKind.COHOMOLOGY: ("target",),
            TaskKind.EXTRACT: ("model", "dgla"),
            TaskKind.COMPARE: ("model", "dgla"),
            TaskKind.CERTIFY: (),
        }[self.kind]
        missing = [name for name in needs if getattr(self, name) is None]
        if missing:
            raise ValueError(f"task {self.kind.value} needs {', '.join(missing)}")
        if self.functor not in ("CA", "SA"):
            raise ValueError(f"functor must be CA or SA, not {self.functor!r}")
        if self.mode not in ("exact", "cohomologous"):
            raise ValueError(f"mode must be exact or cohomologous, not {self.mode!r}")
        if self.module not in ("trivial", "adjoint", "coadjoint"):
            raise ValueError(f"module must be trivial, adjoint or coadjoint, not {self.module!r}")
        return self


class TaskFile(BaseModel):
    schema_version: str
    lie_algebras: list[LieAlgebraSpec] = []
    cdgas: list[CdgaSpec] = []
    gdiff_actions: list[GDiffSpec] = []
    cocycle_data: list[CocycleDataSpec] = []
    builds: list[BuildSpec] = []
    tasks: list[TaskSpec] = Field(default_factory=list)

    @field_validator("schema_version")
    @classmethod
    def _version(cls, value: str) -> str:
        if value != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {value!r}, expected {SCHEMA_VERSION!r}")
        return value

    def defined_names(self) -> dict[str, str]:
        """Every declared name with the section that declares it."""
        names: dict[str, str] = {}
        for section in ("lie_algebras", "cdgas", "gdiff_actions", "cocycle_data", "builds"):
            for item in getattr(self, section):
                names[item.name] = section
        return names


def _location(error: dict) -> str:
    return ".".join(str(part) for part in error.get("loc", ()))


def parse_taskfile_data(data: Any) -> TaskFile:
    """
    Validate a decoded task file.

    Raises:
        TaskFileError: schema violation, with the location of the first error
    """
    try:
        return TaskFile.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise TaskFileError(first["msg"], _location(first)) from None


def parse_taskfile(path: Union[str, Path]) -> TaskFile:
    """
    Parse a task file from disk.

    Args:
        path: Path to the JSON task file

    Returns:
        The validated TaskFile

    Raises:
        TaskFileError: unreadable file, malformed JSON or schema violation
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise TaskFileError(f"cannot read task file: {e.strerror}", str(path)) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise TaskFileError(f"invalid JSON: {e.msg}", f"line {e.lineno}") from None
    return parse_taskfile_data(data)


def find_taskfiles(base_path: Union[str, Path] = "taskfiles") -> dict[str, Path]:
    """All *.json task files under a directory, by stem."""
    base_dir = Path(base_path)
    if not base_dir.exists():
        return {}
    return {p.stem: p for p in sorted(base_dir.glob("*.json"))}
