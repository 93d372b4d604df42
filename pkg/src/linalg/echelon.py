"""
Exact row reduction over the rationals and the subspace / quotient
bases built on top of it.

Rows are sparse dicts ``column index -> Fraction``. The pivot of a row is
its first nonzero column in basis order, and the reduced echelon form is
unique, so every basis produced here is deterministic.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Union

from src.linalg.graded import GradedMap, GradedSpace
from src.linalg.vector import Vec, to_scalar

SparseRow = dict[int, Fraction]
MatrixLike = Sequence[Union[Sequence, Mapping[int, object]]]


def _as_sparse(row: Union[Sequence, Mapping[int, object]]) -> SparseRow:
    if isinstance(row, Mapping):
        items = row.items()
    else:
        items = enumerate(row)
    out: SparseRow = {}
    for j, value in items:
        value = to_scalar(value)
        if value != 0:
            out[int(j)] = value
    return out


def _eliminate(row: SparseRow, pivot: int, pivot_row: SparseRow) -> None:
    """row -= row[pivot] * pivot_row, in place (pivot_row has 1 at pivot)."""
    factor = row.get(pivot)
    if not factor:
        return
    for j, value in pivot_row.items():
        new = row.get(j, Fraction(0)) - factor * value
        if new == 0:
            row.pop(j, None)
        else:
            row[j] = new


@dataclass(frozen=True)
class Echelon:
    """Reduced row echelon form of a matrix."""

    rows: tuple[SparseRow, ...]
    pivots: tuple[int, ...]
    ncols: int
    nrows: int

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def dense(self) -> list[list[Fraction]]:
        """Dense form with the zero rows kept at the bottom (input shape)."""
        out = [[row.get(j, Fraction(0)) for j in range(self.ncols)] for row in self.rows]
        out.extend([Fraction(0)] * self.ncols for _ in range(self.nrows - len(self.rows)))
        return out

    def reduce(self, row: SparseRow) -> SparseRow:
        """Remainder of ``row`` after eliminating every pivot column."""
        remainder = dict(row)
        for pivot, pivot_row in zip(self.pivots, self.rows):
            _eliminate(remainder, pivot, pivot_row)
        return remainder


def rref(matrix: MatrixLike, ncols: Optional[int] = None) -> Echelon:
    """
    Reduced row echelon form of a sparse or dense rational matrix.

    Pivots are the first nonzero columns, strictly increasing; zero rows
    are dropped from ``rows`` but counted in ``nrows``.
    """
    sparse_rows = [_as_sparse(row) for row in matrix]
    if ncols is None:
        ncols = 0
        for row, raw in zip(sparse_rows, matrix):
            width = len(raw) if not isinstance(raw, Mapping) else (max(row) + 1 if row else 0)
            ncols = max(ncols, width)
    basis: dict[int, SparseRow] = {}
    for row in sparse_rows:
        row = dict(row)
        for pivot in sorted(basis):
            _eliminate(row, pivot, basis[pivot])
        if not row:
            continue
        pivot = min(row)
        lead = row[pivot]
        row = {j: value / lead for j, value in row.items()}
        for other in basis.values():
            _eliminate(other, pivot, row)
        basis[pivot] = row
    pivots = tuple(sorted(basis))
    return Echelon(
        rows=tuple(basis[p] for p in pivots),
        pivots=pivots,
        ncols=ncols,
        nrows=len(sparse_rows),
    )


def rank(matrix: MatrixLike, ncols: Optional[int] = None) -> int:
    return rref(matrix, ncols).rank


def nullspace(matrix: MatrixLike, ncols: int) -> list[SparseRow]:
    """Basis of {v : Mv = 0}, one vector per free column."""
    ech = rref(matrix, ncols)
    pivot_set = set(ech.pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec: SparseRow = {free: Fraction(1)}
        for pivot, row in zip(ech.pivots, ech.rows):
            value = row.get(free)
            if value:
                vec[pivot] = -value
        basis.append(vec)
    return basis


def solve(matrix: MatrixLike, rhs: Sequence, ncols: int) -> Optional[list[Fraction]]:
    """One solution x of Mx = rhs (free variables set to zero), or None."""
    augmented = []
    for row, value in zip(matrix, rhs):
        sparse = _as_sparse(row)
        value = to_scalar(value)
        if value != 0:
            sparse[ncols] = value
        augmented.append(sparse)
    ech = rref(augmented, ncols + 1)
    if ncols in ech.pivots:
        return None
    solution = [Fraction(0)] * ncols
    for pivot, row in zip(ech.pivots, ech.rows):
        solution[pivot] = row.get(ncols, Fraction(0))
    return solution


class SpanSolver:
    """
    Expresses vectors in a fixed (not necessarily orthogonal) list of
    vectors. Built once by row reducing [v_i | e_i].
    """

    def __init__(self, vectors: Sequence[Mapping[str, Fraction]], labels: Sequence[str]):
        self.labels = tuple(labels)
        self.count = len(vectors)
        self._position = {label: j for j, label in enumerate(self.labels)}
        width = len(self.labels)
        rows = []
        for i, vec in enumerate(vectors):
            row: SparseRow = {self._position[l]: v for l, v in vec.items()}
            row[width + i] = Fraction(1)
            rows.append(row)
        self._echelon = rref(rows, width + self.count)
        self._width = width
        self.independent = all(p < width for p in self._echelon.pivots)

    def coordinates(self, vec: Mapping[str, Fraction]) -> Optional[list[Fraction]]:
        """Coefficients c with Σ c_i v_i = vec, or None if vec is outside the span."""
        row: SparseRow = {self._position[l]: v for l, v in vec.items()}
        remainder = self._echelon.reduce(row)
        if any(j < self._width for j in remainder):
            return None
        # remainder = row - Σ r_k, and the tag block of each pivot row records -Σ c_i v_i.
        coords = [Fraction(0)] * self.count
        for j, value in remainder.items():
            coords[j - self._width] = -value
        return coords


@dataclass(frozen=True)
class SubquotientBasis:
    """
    A subspace or quotient of ``ambient`` with explicit maps.

    ``space`` is the subquotient as a graded space whose labels name the
    representatives; ``section`` lifts into the ambient space and
    ``projection`` maps ambient vectors to subquotient coordinates.
    For a subspace, ``projection`` is only meaningful on the subspace.
    """

    ambient: GradedSpace
    space: GradedSpace
    representatives: tuple[Vec, ...]
    projection: GradedMap
    section: GradedMap
    kind: str = "subspace"

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def labels(self) -> tuple[str, ...]:
        return self.space.labels

    def project(self, vec: Mapping[str, Fraction]) -> Vec:
        return self.projection(vec)

    def lift(self, vec: Mapping[str, Fraction]) -> Vec:
        return self.section(vec)

    def contains(self, vec: Mapping[str, Fraction]) -> bool:
        """Membership test for subspaces."""
        return Vec(vec) == self.lift(self.project(vec))

    def round_trip_holds(self) -> bool:
        return all(
            self.project(self.lift(Vec.basis(label))) == Vec.basis(label)
            for label in self.labels
        )


def _echelon_vectors(space: GradedSpace, vectors: Sequence[Mapping[str, Fraction]]) -> list[Vec]:
    """Reduced echelon basis (per degree) of the span of homogeneous vectors."""
    by_degree: dict[int, list[Mapping[str, Fraction]]] = {}
    for vec in vectors:
        degree = space.vector_degree(vec)
        if degree is not None:
            by_degree.setdefault(degree, []).append(vec)
    result: list[Vec] = []
    for degree in sorted(by_degree):
        labels = space.in_degree(degree)
        position = {l: j for j, l in enumerate(labels)}
        rows = [{position[l]: v for l, v in vec.items()} for vec in by_degree[degree]]
        ech = rref(rows, len(labels))
        for row in ech.rows:
            result.append(Vec({labels[j]: v for j, v in row.items()}))
    return result


def span(ambient: GradedSpace, vectors: Sequence[Mapping[str, Fraction]]) -> SubquotientBasis:
    """Subspace spanned by homogeneous vectors; representatives in reduced echelon form."""
    reps = _echelon_vectors(ambient, vectors)
    pivots = [min(rep, key=ambient.index) for rep in reps]
    space = GradedSpace(tuple((p, ambient.degree(p)) for p in pivots))
    section = GradedMap(space, ambient, 0, {p: rep for p, rep in zip(pivots, reps)})
    projection = GradedMap(ambient, space, 0, {p: Vec.basis(p) for p in pivots})
    ordered = tuple(section.column(label) for label in space.labels)
    return SubquotientBasis(ambient, space, ordered, projection, section, "subspace")


def kernel(m: GradedMap) -> SubquotientBasis:
    vectors: list[Vec] = []
    for degree in m.source.degrees:
        rows, cols, matrix = m.block(degree)
        for null in nullspace(matrix, len(cols)):
            vectors.append(Vec({cols[j]: v for j, v in null.items()}))
    result = span(m.source, vectors)
    _assert_rank_nullity(m, result)
    return result


def image(m: GradedMap) -> SubquotientBasis:
    return span(m.target, list(m.columns.values()))


def _assert_rank_nullity(m: GradedMap, ker: SubquotientBasis) -> None:
    im = image(m)
    if ker.dim + im.dim != m.source.dim:
        raise AssertionError(
            f"rank-nullity violated: dim ker {ker.dim} + dim im {im.dim} != {m.source.dim}"
        )


def quotient(ambient: GradedSpace, sub: SubquotientBasis) -> SubquotientBasis:
    """
    ambient / sub. Representatives are the non-pivot basis directions of
    the echelonized subspace; the projection kills ``sub`` exactly.
    """
    reps = _echelon_vectors(ambient, [sub.lift(Vec.basis(l)) for l in sub.labels])
    pivot_rows = {min(rep, key=ambient.index): rep for rep in reps}
    free = [label for label in ambient.labels if label not in pivot_rows]
    space = GradedSpace(tuple((label, ambient.degree(label)) for label in free))
    free_set = set(free)
    columns: dict[str, Vec] = {}
    for label in ambient.labels:
        if label in free_set:
            columns[label] = Vec.basis(label)
        else:
            row = pivot_rows[label]
            columns[label] = Vec((j, -v) for j, v in row.items() if j != label)
    projection = GradedMap(ambient, space, 0, columns)
    section = GradedMap(space, ambient, 0, {label: Vec.basis(label) for label in free})
    return SubquotientBasis(
        ambient,
        space,
        tuple(Vec.basis(label) for label in free),
        projection,
        section,
        "quotient",
    )
