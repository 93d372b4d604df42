"""
Equality of 2-cocycles, coefficient-wise or up to a Chevalley–Eilenberg
coboundary.
"""

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations, product
from typing import Any, Optional

from src.cocycles.chevalley import CeComplex, ce_differential
from src.cocycles.extract import Cocycle2
from src.dgla.errors import ConstructionRejected
from src.linalg.echelon import SpanSolver
from src.linalg.vector import Vec


class CompareMode(str, Enum):
    EXACT = "exact"
    COHOMOLOGOUS = "cohomologous"


@dataclass
class CocycleComparison:
    """Verdict; ``witness`` is the first differing pair, ``cobounding`` τ has σa − σb = dτ."""

    mode: CompareMode
    equal: bool
    witness: Optional[str] = None
    cobounding: dict = field(default_factory=dict)

    def to_json(self) -> dict[str, Any]:
        return {
            "mode": self.mode.value,
            "equal": self.equal,
            "witness": self.witness,
            "cobounding": {x: value.to_json() for x, value in sorted(self.cobounding.items())},
        }


def _same_shape(a: Cocycle2, b: Cocycle2) -> None:
    if a.base.basis != b.base.basis:
        raise ConstructionRejected(
            "cocycles live on different Lie algebras", f"{a.base.name} vs {b.base.name}"
        )
    if a.module.labels != b.module.labels:
        raise ConstructionRejected(
            "cocycles take values in different modules", f"{a.module.name} vs {b.module.name}"
        )


def _flatten(values: dict) -> Vec:
    """Cochain on increasing tuples → vector over "x^y→m" labels."""
    return Vec(
        (CeComplex.label(args, m), c) for args, value in values.items() for m, c in value.items()
    )


def _first_difference(a: Cocycle2, b: Cocycle2) -> Optional[str]:
    for u, v in product(a.base.basis, repeat=2):
        if a(u, v) != b(u, v):
            return f"({u}, {v}): {a(u, v).to_json()} != {b(u, v).to_json()}"
    return None


def compare_cocycles(
    a: Cocycle2, b: Cocycle2, mode: CompareMode = CompareMode.EXACT
) -> CocycleComparison:
    """
    Exact: every coefficient agrees. Cohomologous: solve σa − σb = d_CE τ
    for a linear map τ: base → module, with the action of ``a.module``.
    """
    _same_shape(a, b)
    witness = _first_difference(a, b)
    if mode is CompareMode.EXACT or witness is None:
        return CocycleComparison(mode, witness is None, witness)

    rep, g = a.module, a.base
    pairs = list(combinations(g.basis, 2))
    labels = [CeComplex.label(args, m) for args in pairs for m in rep.labels]
    unknowns = [(x, m) for x in g.basis for m in rep.labels]
    columns = []
    for x, m in unknowns:
        columns.append(_flatten(ce_differential(rep, {(x,): Vec.basis(m)}, 1)))
    difference = _flatten({(u, v): a(u, v) - b(u, v) for u, v in pairs})
    coords = SpanSolver(columns, labels).coordinates(difference)
    if coords is None:
        return CocycleComparison(mode, False, witness)
    tau: dict[str, Vec] = {}
    for (x, m), c in zip(unknowns, coords):
        if c:
            tau[x] = tau.get(x, Vec()) + Vec.basis(m, c)
    return CocycleComparison(mode, True, None, tau)
