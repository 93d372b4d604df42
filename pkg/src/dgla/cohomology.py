"""
Cohomology of finite graded complexes.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from src.dgla.errors import InternalConsistencyError
from src.linalg.echelon import SpanSolver, nullspace, rref
from src.linalg.graded import GradedMap, GradedSpace
from src.linalg.vector import Vec


@dataclass(frozen=True)
class CohomologyReport:
    """H^degree with closed representatives independent modulo exact ones."""

    degree: int
    dimension: int
    representatives: tuple[Vec, ...]
    exact: tuple[Vec, ...] = field(default=(), repr=False)
    labels: tuple[str, ...] = field(default=(), repr=False)

    def coordinates(self, vec: Mapping[str, Fraction]) -> Optional[list[Fraction]]:
        """Class of a closed vector in the representative basis, None if not closed."""
        solver = SpanSolver(list(self.representatives) + list(self.exact), self.labels)
        coords = solver.coordinates(vec)
        if coords is None:
            return None
        return coords[: self.dimension]

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "dimension": self.dimension,
            "representatives": [rep.to_json() for rep in self.representatives],
        }


def _check_square_zero(space: GradedSpace, d: GradedMap, degree: int) -> None:
    for label in space.in_degree(degree - 1):
        if d(d.column(label)):
            raise InternalConsistencyError(f"d∘d != 0 on {label}")
    for label in space.in_degree(degree):
        if d(d.column(label)):
            raise InternalConsistencyError(f"d∘d != 0 on {label}")


def cohomology(space: GradedSpace, d: GradedMap, degree: int) -> CohomologyReport:
    """
    H^degree of (space, d). Representatives are the closed directions left
    after row reducing against the exact subspace, in basis order.
    """
    if d.degree != 1 or d.source != space:
        raise ValueError("cohomology needs a degree +1 endomorphism of the space")
    _check_square_zero(space, d, degree)
    labels = space.in_degree(degree)
    position = {label: j for j, label in enumerate(labels)}

    exact_rows = [
        {position[l]: v for l, v in d.column(src).items()} for src in space.in_degree(degree - 1)
    ]
    exact_echelon = rref(exact_rows, len(labels))
    exact = tuple(Vec({labels[j]: v for j, v in row.items()}) for row in exact_echelon.rows)

    _, cols, matrix = d.block(degree)
    closed = nullspace(matrix, len(cols))
    combined = rref(list(exact_echelon.rows) + closed, len(labels))
    exact_pivots = set(exact_echelon.pivots)
    representatives = []
    for pivot, row in zip(combined.pivots, combined.rows):
        if pivot in exact_pivots:
            continue
        rep = exact_echelon.reduce(row)
        representatives.append(Vec({labels[j]: v for j, v in rep.items()}))
    dim_closed = len(closed)
    if len(representatives) != dim_closed - exact_echelon.rank:
        raise InternalConsistencyError(
            f"H^{degree}: {len(representatives)} representatives for "
            f"{dim_closed} closed and {exact_echelon.rank} exact"
        )
    return CohomologyReport(degree, len(representatives), tuple(representatives), exact, labels)


def cohomology_table(space: GradedSpace, d: GradedMap) -> dict[int, CohomologyReport]:
    degrees = sorted(set(space.degrees) | {n + 1 for n in space.degrees})
    return {n: cohomology(space, d, n) for n in degrees if space.in_degree(n)}


def is_acyclic(space: GradedSpace, d: GradedMap) -> Optional[CohomologyReport]:
    """None when every cohomology group vanishes, else the first nonzero one."""
    for report in cohomology_table(space, d).values():
        if report.dimension:
            return report
    return None