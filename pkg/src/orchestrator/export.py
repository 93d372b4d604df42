"""
Deterministic export of structure-constant tables (JSON or text) and
re-import of JSON tables.
"""

import json
from enum import Enum
from typing import Any, Union

from src.cocycles.extract import Cocycle2
from src.dgla.cdga import Cdga
from src.dgla.dgla import Dgla
from src.dgla.errors import TaskFileError
from src.dgla.gdiff import GDiffSpace
from src.dgla.lie import LieAlgebra
from src.functors.current import CurrentAlgebra
from src.linalg.vector import Vec, format_scalar

Exportable = Union[LieAlgebra, Dgla, Cdga, GDiffSpace, CurrentAlgebra, Cocycle2]


class ExportFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


def _gdiff_json(v: GDiffSpace) -> dict:
    return {
        "name": v.name,
        "lie": v.g.name,
        "basis": v.space.to_json(),
        "differential": [[t, s, str(c)] for t, s, c in v.differential.entries],
        "contractions": {
            x: [[t, s, str(c)] for t, s, c in v.contraction[x].entries] for x in v.g.basis
        },
    }


def to_document(obj: Exportable) -> Any:
    if isinstance(obj, GDiffSpace):
        return _gdiff_json(obj)
    if isinstance(obj, Cocycle2):
        return {"base": obj.base.name, "module": obj.module.name, "values": obj.to_json()}
    return obj.to_json()


def format_vector(vec: Vec) -> str:
    if not vec:
        return "0"
    terms = []
    for label, coeff in vec.sorted_items():
        terms.append(label if coeff == 1 else f"{format_scalar(coeff)}·{label}")
    return " + ".join(terms)


def _text_lines(obj: Exportable) -> list[str]:
    if isinstance(obj, Cocycle2):
        lines = [f"cocycle on {obj.base.name} with values in {obj.module.name}"]
        for u, v in obj.nonzero_pairs():
            lines.append(f"  σ({u}, {v}) = {format_vector(obj(u, v))}")
        return lines
    if isinstance(obj, GDiffSpace):
        lines = [f"{obj.name} over {obj.g.name}"]
        for x in obj.g.basis:
            for label in obj.labels:
                image = obj.contraction[x](Vec.basis(label))
                if image:
                    lines.append(f"  I({x}) {label} = {format_vector(image)}")
        return lines
    if isinstance(obj, CurrentAlgebra):
        obj = obj.as_lie()
    if isinstance(obj, LieAlgebra):
        lines = [f"{obj.name}", f"  basis: {' '.join(obj.basis)}"]
        for x in obj.basis:
            for y in obj.basis:
                value = obj.bracket_basis(x, y)
                if value:
                    lines.append(f"  [{x}, {y}] = {format_vector(value)}")
        return lines
    space = obj.space
    basis = " ".join(f"{label}({degree})" for label, degree in space.basis)
    lines = [f"{obj.name}", f"  basis: {basis}"]
    symbol = "·" if isinstance(obj, Cdga) else None
    for a in space.labels:
        for b in space.labels:
            if isinstance(obj, Cdga):
                if obj.unit in (a, b):
                    continue
                value = obj.product_basis(a, b)
            else:
                value = obj.bracket_basis(a, b)
            if value:
                head = f"{a}{symbol}{b}" if symbol else f"[{a}, {b}]"
                lines.append(f"  {head} = {format_vector(value)}")
    for a in space.labels:
        image = obj.d(Vec.basis(a))
        if image:
            lines.append(f"  d({a}) = {format_vector(image)}")
    return lines


def export(obj: Exportable, fmt: ExportFormat = ExportFormat.JSON) -> str:
    """Byte-identical output for identical objects."""
    if fmt is ExportFormat.TEXT:
        return "\n".join(_text_lines(obj)) + "\n"
    return json.dumps(to_document(obj), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def import_table(text: str) -> Union[LieAlgebra, Dgla, Cdga]:
    """
    Rebuild a Lie algebra, dgla or CDGA from its JSON export. CA/SA
    exports come back as plain Lie algebras on the quotient labels.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise TaskFileError(f"invalid JSON: {e.msg}", f"line {e.lineno}") from None
    if not isinstance(data, dict) or "basis" not in data:
        raise TaskFileError("not a structure-constant table", "basis")
    if "unit" in data:
        return Cdga.from_json(data)
    if "differential" in data:
        return Dgla.from_json(data)
    return LieAlgebra.from_json(data)
