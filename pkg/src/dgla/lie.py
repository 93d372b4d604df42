"""
Lie algebras by structure constants, matrix Lie algebras, and
multilinear forms on them.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Mapping, Optional, Sequence

from src.dgla.certificate import Certificate
from src.linalg.echelon import SpanSolver
from src.linalg.vector import ScalarLike, Vec, to_scalar

Matrix = tuple[tuple[Fraction, ...], ...]


def dual_label(label: str) -> str:
    return f"{label}*"


@dataclass(frozen=True)
class LieAlgebra:
    """
    Lie algebra on an ordered basis; ``structure[(x, y)]`` is [x, y].

    Only nonzero brackets are stored, for both orders.
    """

    name: str
    basis: tuple[str, ...]
    structure: dict = field(default_factory=dict)
    matrices: Optional[dict] = None

    @classmethod
    def from_brackets(
        cls,
        name: str,
        basis: Sequence[str],
        brackets: Mapping[tuple[str, str], Mapping[str, ScalarLike]],
        matrices: Optional[Mapping[str, Matrix]] = None,
        complete: bool = True,
    ) -> "LieAlgebra":
        """
        Build from a bracket table. With ``complete`` the opposite order is
        filled in by antisymmetry wherever it is missing.
        """
        table: dict[tuple[str, str], Vec] = {}
        for (x, y), value in brackets.items():
            vec = Vec(value)
            if vec:
                table[(x, y)] = vec
        if complete:
            for (x, y), vec in list(table.items()):
                if (y, x) not in table and x != y:
                    table[(y, x)] = -vec
        known = set(basis)
        for (x, y), vec in table.items():
            unknown = ({x, y} | set(vec)) - known
            if unknown:
                raise ValueError(f"{name}: bracket [{x},{y}] uses unknown labels {sorted(unknown)}")
        return cls(name, tuple(basis), table, dict(matrices) if matrices else None)

    @classmethod
    def abelian(cls, name: str, basis: Sequence[str]) -> "LieAlgebra":
        return cls(name, tuple(basis), {})

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def dual_basis(self) -> tuple[str, ...]:
        return tuple(dual_label(x) for x in self.basis)

    def bracket_basis(self, x: str, y: str) -> Vec:
        return self.structure.get((x, y), Vec())

    def bracket(self, u: Mapping[str, Fraction], v: Mapping[str, Fraction]) -> Vec:
        result = Vec()
        for x, a in u.items():
            for y, b in v.items():
                value = self.structure.get((x, y))
                if value:
                    result = result.add_scaled(value, a * b)
        return result

    def coadjoint(self, x: str, xi: Mapping[str, Fraction]) -> Vec:
        """ad*_x ξ = −ξ∘ad_x, on vectors over the dual basis labels."""
        result = Vec()
        for z in self.basis:
            total = Fraction(0)
            for w, coeff in self.bracket_basis(x, z).items():
                total += xi.get(dual_label(w), Fraction(0)) * coeff
            if total:
                result = result + Vec({dual_label(z): -total})
        return result

    def is_abelian(self) -> bool:
        return not self.structure

    def relabeled(self, name: str, rename: Mapping[str, str]) -> "LieAlgebra":
        table = {
            (rename[x], rename[y]): vec.relabel(rename) for (x, y), vec in self.structure.items()
        }
        return LieAlgebra(name, tuple(rename[x] for x in self.basis), table)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "basis": list(self.basis),
            "brackets": [
                [x, y, z, str(c)]
                for (x, y) in sorted(self.structure)
                for z, c in self.structure[(x, y)].sorted_items()
            ],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "LieAlgebra":
        """Inverse of ``to_json``; both orders are read as given."""
        brackets: dict[tuple[str, str], dict[str, Fraction]] = {}
        for x, y, z, value in data.get("brackets", []):
            brackets.setdefault((x, y), {})[z] = to_scalar(value)
        return cls.from_brackets(data["name"], data["basis"], brackets, complete=False)


def validate_lie(g: LieAlgebra) -> Certificate:
    """Antisymmetry and Jacobi on all basis pairs and triples."""
    cert = Certificate(f"Lie algebra {g.name}")
    witness, count = None, 0
    for x in g.basis:
        for y in g.basis:
            count += 1
            if witness is None and g.bracket_basis(x, y) != -g.bracket_basis(y, x):
                witness = f"[{x},{y}] != -[{y},{x}]"
    cert.add("antisymmetry", witness, count)
    witness, count = None, 0
    for x in g.basis:
        for y in g.basis:
            for z in g.basis:
                count += 1
                if witness is not None:
                    continue
                ex, ey, ez = Vec.basis(x), Vec.basis(y), Vec.basis(z)
                lhs = g.bracket(ex, g.bracket(ey, ez))
                rhs = g.bracket(g.bracket(ex, ey), ez) + g.bracket(ey, g.bracket(ex, ez))
                if lhs != rhs:
                    witness = f"Jacobi fails on ({x}, {y}, {z})"
    cert.add("jacobi", witness, count)
    return cert


def _as_matrix(rows: Sequence[Sequence[ScalarLike]]) -> Matrix:
    return tuple(tuple(to_scalar(v) for v in row) for row in rows)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, m, k = len(a), len(b), len(b[0]) if b else 0
    return tuple(
        tuple(sum((a[i][l] * b[l][j] for l in range(m)), Fraction(0)) for j in range(k))
        for i in range(n)
    )


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def _flatten(a: Matrix) -> dict[str, Fraction]:
    return {f"{i},{j}": v for i, row in enumerate(a) for j, v in enumerate(row) if v != 0}


def matrix_lie_algebra(
    name: str, generators: Mapping[str, Sequence[Sequence[ScalarLike]]]
) -> LieAlgebra:
    """
    Lie algebra spanned by the given matrices under the commutator,
    with structure constants solved exactly in that basis.
    """
    mats = {label: _as_matrix(rows) for label, rows in generators.items()}
    labels = list(mats)
    size = len(next(iter(mats.values())))
    positions = [f"{i},{j}" for i in range(size) for j in range(size)]
    solver = SpanSolver([_flatten(mats[l]) for l in labels], positions)
    if not solver.independent:
        raise ValueError(f"{name}: generating matrices are linearly dependent")
    table: dict[tuple[str, str], Vec] = {}
    for x, y in product(labels, repeat=2):
        ab, ba = matmul(mats[x], mats[y]), matmul(mats[y], mats[x])
        comm = tuple(tuple(p - q for p, q in zip(r1, r2)) for r1, r2 in zip(ab, ba))
        coords = solver.coordinates(_flatten(comm))
        if coords is None:
            raise ValueError(f"{name}: [{x},{y}] leaves the span of the generators")
        vec = Vec(zip(labels, coords))
        if vec:
            table[(x, y)] = vec
    return LieAlgebra(name, tuple(labels), table, mats)


@dataclass(frozen=True)
class Form:
    """
    Multilinear form on a Lie algebra given by its values on basis tuples.
    Missing tuples are zero.
    """

    arity: int
    values: dict = field(default_factory=dict)

    @classmethod
    def from_entries(cls, arity: int, entries: Mapping[tuple, ScalarLike]) -> "Form":
        values = {}
        for key, value in entries.items():
            if len(key) != arity:
                raise ValueError(f"form entry {key} does not have arity {arity}")
            value = to_scalar(value)
            if value != 0:
                values[tuple(key)] = value
        return cls(arity, values)

    @classmethod
    def symmetric(cls, arity: int, entries: Mapping[tuple, ScalarLike]) -> "Form":
        """Symmetric form from values on one ordering of each tuple."""
        values: dict[tuple, Fraction] = {}
        for key, value in entries.items():
            for perm in set(permutations(key)):
                values[perm] = to_scalar(value)
        return cls.from_entries(arity, values)

    @classmethod
    def skew(cls, entries: Mapping[tuple[str, str], ScalarLike]) -> "Form":
        values: dict[tuple, Fraction] = {}
        for (x, y), value in entries.items():
            values[(x, y)] = to_scalar(value)
            values[(y, x)] = -to_scalar(value)
        return cls.from_entries(2, values)

    @classmethod
    def zero(cls, arity: int) -> "Form":
        return cls(arity, {})

    def __call__(self, *labels: str) -> Fraction:
        return self.values.get(tuple(labels), Fraction(0))

    def evaluate(self, *vectors: Mapping[str, Fraction]) -> Fraction:
        total = Fraction(0)
        for key, value in self.values.items():
            term = value
            for label, vec in zip(key, vectors):
                coeff = vec.get(label)
                if not coeff:
                    term = Fraction(0)
                    break
                term *= coeff
            total += term
        return total

    def transpose(self) -> "Form":
        return Form(self.arity, {tuple(reversed(k)): v for k, v in self.values.items()})

    def __add__(self, other: "Form") -> "Form":
        merged = dict(self.values)
        for key, value in other.values.items():
            merged[key] = merged.get(key, Fraction(0)) + value
        return Form.from_entries(self.arity, merged)

    def scaled(self, factor: ScalarLike) -> "Form":
        factor = to_scalar(factor)
        return Form.from_entries(self.arity, {k: v * factor for k, v in self.values.items()})

    def is_symmetric(self) -> bool:
        return all(
            self(*perm) == value for key, value in self.values.items() for perm in permutations(key)
        )

    def is_skew(self) -> bool:
        return self.arity == 2 and all(self(y, x) == -v for (x, y), v in self.values.items())

    def symmetric_part(self) -> "Form":
        return (self + self.transpose()).scaled(Fraction(1, 2))

    def skew_part(self) -> "Form":
        return (self + self.transpose().scaled(-1)).scaled(Fraction(1, 2))

    def to_json(self) -> list[list[str]]:
        return [list(key) + [str(value)] for key, value in sorted(self.values.items())]


def invariance_defect(g: LieAlgebra, form: Form) -> Optional[str]:
    """
    First witness of non-invariance: Σ_i p(z_1, .., [x, z_i], .., z_n) ≠ 0.
    """
    for x in g.basis:
        for args in product(g.basis, repeat=form.arity):
            total = Fraction(0)
            for i, z in enumerate(args):
                for w, coeff in g.bracket_basis(x, z).items():
                    total += coeff * form(*args[:i], w, *args[i + 1:])
            if total != 0:
                return f"x={x}, args={args}: defect {total}"
    return None


def trace_form(g: LieAlgebra, arity: int = 2) -> Form:
    """Symmetrized trace of products in the defining matrix representation."""
    if not g.matrices:
        raise ValueError(f"{g.name} carries no matrix representation")
    values: dict[tuple, Fraction] = {}
    for args in product(g.basis, repeat=arity):
        total = Fraction(0)
        perms = list(permutations(args))
        for perm in perms:
            prod_matrix = g.matrices[perm[0]]
            for label in perm[1:]:
                prod_matrix = matmul(prod_matrix, g.matrices[label])
            total += trace(prod_matrix)
        values[args] = total / len(perms)
    return Form.from_entries(arity, values)
