"""
Finite-dimensional integer-graded vector spaces with named bases and
degree-homogeneous sparse linear maps between them.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional

from src.linalg.vector import ScalarLike, Vec, to_scalar

TENSOR_SEPARATOR = "⊗"


def tensor_label(left: str, right: str) -> str:
    return f"{left}{TENSOR_SEPARATOR}{right}"


@dataclass(frozen=True)
class GradedSpace:
    """
    Graded space with an ordered basis of (label, degree) pairs.

    The basis is always kept in ascending (degree, label) order, which
    fixes every pivot choice made downstream.
    """

    basis: tuple[tuple[str, int], ...]
    _degrees: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _index: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _by_degree: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        pairs = ((str(l), int(d)) for l, d in self.basis)
        ordered = tuple(sorted(pairs, key=lambda b: (b[1], b[0])))
        labels = [label for label, _ in ordered]
        if len(set(labels)) != len(labels):
            duplicates = sorted({l for l in labels if labels.count(l) > 1})
            raise ValueError(f"duplicate basis labels: {duplicates}")
        object.__setattr__(self, "basis", ordered)
        by_degree: dict[int, list[str]] = {}
        for position, (label, degree) in enumerate(ordered):
            self._degrees[label] = degree
            self._index[label] = position
            by_degree.setdefault(degree, []).append(label)
        self._by_degree.update({d: tuple(ls) for d, ls in by_degree.items()})

    @classmethod
    def from_degrees(cls, mapping: Mapping[str, int]) -> "GradedSpace":
        return cls(tuple(mapping.items()))

    @classmethod
    def empty(cls) -> "GradedSpace":
        return cls(())

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self._by_degree))

    @property
    def degree_index(self) -> dict[int, tuple[int, ...]]:
        """Map degree → ordered basis positions."""
        return {d: tuple(self._index[l] for l in ls) for d, ls in sorted(self._by_degree.items())}

    def degree(self, label: str) -> int:
        try:
            return self._degrees[label]
        except KeyError:
            raise KeyError(f"unknown basis label {label!r}") from None

    def __contains__(self, label: object) -> bool:
        return label in self._degrees

    def index(self, label: str) -> int:
        return self._index[label]

    def in_degree(self, degree: int) -> tuple[str, ...]:
        return self._by_degree.get(degree, ())

    def dim_in_degree(self, degree: int) -> int:
        return len(self.in_degree(degree))

    def vector_degree(self, vec: Mapping[str, Fraction]) -> Optional[int]:
        """Degree of a homogeneous vector, None for zero; raises if inhomogeneous."""
        degrees = {self.degree(label) for label in vec}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError(f"vector is not homogeneous: degrees {sorted(degrees)}")
        return degrees.pop()

    def shift(self, k: int) -> "GradedSpace":
        """(V[k])^n = V^{n+k}: every basis element moves down by k."""
        return GradedSpace(tuple((label, degree - k) for label, degree in self.basis))

    def direct_sum(self, other: "GradedSpace") -> "GradedSpace":
        return GradedSpace(self.basis + other.basis)

    def relabel(self, rename: Callable[[str], str]) -> "GradedSpace":
        return GradedSpace(tuple((rename(label), degree) for label, degree in self.basis))

    def to_json(self) -> list[list]:
        return [[label, degree] for label, degree in self.basis]


def tensor(a: GradedSpace, b: GradedSpace) -> GradedSpace:
    """Tensor product: basis of label pairs, degrees add."""
    return GradedSpace(
        tuple(
            (tensor_label(la, lb), da + db)
            for la, da in a.basis
            for lb, db in b.basis
        )
    )


@dataclass(frozen=True)
class GradedMap:
    """
    Degree-homogeneous sparse linear map, stored by columns.

    ``columns[s]`` is the image of the basis vector ``s`` of the source.
    """

    source: GradedSpace
    target: GradedSpace
    degree: int
    columns: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        cleaned: dict[str, Vec] = {}
        for src, image in self.columns.items():
            if src not in self.source:
                raise ValueError(f"map column {src!r} is not a source basis label")
            image = Vec(image)
            for tgt in image:
                if tgt not in self.target:
                    raise ValueError(f"map entry {tgt!r} is not a target basis label")
                expected = self.source.degree(src) + self.degree
                if self.target.degree(tgt) != expected:
                    raise ValueError(
                        f"entry ({tgt}, {src}) breaks homogeneity: degree "
                        f"{self.target.degree(tgt)} != {expected}"
                    )
            if image:
                cleaned[src] = image
        object.__setattr__(self, "columns", cleaned)

    @classmethod
    def from_entries(
        cls,
        source: GradedSpace,
        target: GradedSpace,
        degree: int,
        entries: Iterable[tuple[str, str, ScalarLike]],
    ) -> "GradedMap":
        """Build from (target_label, source_label, value) triplets."""
        columns: dict[str, Vec] = {}
        for tgt, src, value in entries:
            columns[src] = columns.get(src, Vec()) + Vec({tgt: to_scalar(value)})
        return cls(source, target, degree, columns)

    @classmethod
    def zero(cls, source: GradedSpace, target: GradedSpace, degree: int = 0) -> "GradedMap":
        return cls(source, target, degree, {})

    @classmethod
    def identity(cls, space: GradedSpace) -> "GradedMap":
        return cls(space, space, 0, {label: Vec.basis(label) for label in space.labels})

    @property
    def entries(self) -> list[tuple[str, str, Fraction]]:
        """Canonical sorted (target, source, value) triplets."""
        triples = [
            (tgt, src, value)
            for src, image in self.columns.items()
            for tgt, value in image.items()
        ]
        return sorted(triples, key=lambda t: (self.target.index(t[0]), self.source.index(t[1])))

    def column(self, label: str) -> Vec:
        return self.columns.get(label, Vec())

    def __call__(self, vec: Mapping[str, Fraction]) -> Vec:
        result = Vec()
        for label, value in vec.items():
            image = self.columns.get(label)
            if image:
                result = result.add_scaled(image, value)
        return result

    def compose(self, inner: "GradedMap") -> "GradedMap":
        """self ∘ inner."""
        if inner.target != self.source:
            raise ValueError("cannot compose: inner target differs from outer source")
        columns = {src: self(image) for src, image in inner.columns.items()}
        return GradedMap(inner.source, self.target, inner.degree + self.degree, columns)

    def __add__(self, other: "GradedMap") -> "GradedMap":
        self._check_parallel(other)
        labels = set(self.columns) | set(other.columns)
        return GradedMap(
            self.source,
            self.target,
            self.degree,
            {l: self.column(l) + other.column(l) for l in labels},
        )

    def __sub__(self, other: "GradedMap") -> "GradedMap":
        return self + other.scaled(-1)

    def scaled(self, factor: ScalarLike) -> "GradedMap":
        return GradedMap(
            self.source,
            self.target,
            self.degree,
            {l: image * factor for l, image in self.columns.items()},
        )

    def _check_parallel(self, other: "GradedMap") -> None:
        if (self.source, self.target, self.degree) != (other.source, other.target, other.degree):
            raise ValueError("maps have different source, target or degree")

    def is_zero(self) -> bool:
        return not self.columns

    def block(
        self, source_degree: int
    ) -> tuple[tuple[str, ...], tuple[str, ...], list[dict[int, Fraction]]]:
        """
        Matrix of the map from degree ``source_degree``.

        Returns (row labels, column labels, sparse rows keyed by column index).
        """
        cols = self.source.in_degree(source_degree)
        rows = self.target.in_degree(source_degree + self.degree)
        row_pos = {label: i for i, label in enumerate(rows)}
        matrix: list[dict[int, Fraction]] = [dict() for _ in rows]
        for j, src in enumerate(cols):
            for tgt, value in self.column(src).items():
                matrix[row_pos[tgt]][j] = value
        return rows, cols, matrix
