"""
Differential graded Lie algebras by sparse structure constants.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from src.dgla.certificate import Certificate
from src.dgla.errors import DegreeError
from src.dgla.lie import LieAlgebra
from src.linalg.graded import GradedMap, GradedSpace
from src.linalg.vector import ScalarLike, Vec, to_scalar
from src.utils.parallel import chunked, ordered_map


def koszul_sign(p: int, q: int) -> int:
    """(−1)^{pq}."""
    return -1 if (p * q) % 2 else 1


def parity_sign(p: int) -> int:
    """(−1)^p."""
    return -1 if p % 2 else 1


@dataclass(frozen=True)
class Dgla:
    """
    Graded Lie bracket of degree 0 plus a differential of degree +1.

    ``structure[(a, b)]`` holds the nonzero brackets of basis elements,
    stored for both orders.
    """

    name: str
    space: GradedSpace
    structure: dict
    differential: GradedMap
    _partners: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        for (a, b) in self.structure:
            self._partners.setdefault(a, set()).add(b)

    @classmethod
    def build(
        cls,
        name: str,
        space: GradedSpace,
        brackets: Mapping[tuple[str, str], Mapping[str, ScalarLike]],
        differential: Optional[Mapping[str, Mapping[str, ScalarLike]]] = None,
        complete: bool = True,
    ) -> "Dgla":
        """
        Build from bracket values and differential columns.

        With ``complete`` the missing order of each pair is filled in by
        graded antisymmetry. Inhomogeneous brackets raise ``DegreeError``.
        """
        table: dict[tuple[str, str], Vec] = {}
        for (a, b), value in brackets.items():
            vec = Vec(value)
            if not vec:
                continue
            expected = space.degree(a) + space.degree(b)
            for label in vec:
                if space.degree(label) != expected:
                    raise DegreeError(
                        f"{name}: [{a},{b}] has a term {label} outside degree {expected}"
                    )
            table[(a, b)] = vec
        if complete:
            for (a, b), vec in list(table.items()):
                if a != b and (b, a) not in table:
                    sign = -koszul_sign(space.degree(a), space.degree(b))
                    table[(b, a)] = vec * sign
        d = GradedMap(space, space, 1, {k: Vec(v) for k, v in (differential or {}).items()})
        return cls(name, space, table, d)

    @classmethod
    def from_lie(cls, g: LieAlgebra) -> "Dgla":
        space = GradedSpace(tuple((x, 0) for x in g.basis))
        return cls(g.name, space, dict(g.structure), GradedMap.zero(space, space, 1))

    @property
    def labels(self) -> tuple[str, ...]:
        return self.space.labels

    @property
    def dim(self) -> int:
        return self.space.dim

    def degree(self, label: str) -> int:
        return self.space.degree(label)

    def partners(self, label: str) -> set:
        return self._partners.get(label, set())

    def bracket_basis(self, a: str, b: str) -> Vec:
        return self.structure.get((a, b), Vec())

    def bracket(self, u: Mapping[str, Fraction], v: Mapping[str, Fraction]) -> Vec:
        result = Vec()
        for a, x in u.items():
            partners = self._partners.get(a)
            if not partners:
                continue
            for b, y in v.items():
                if b in partners:
                    result = result.add_scaled(self.structure[(a, b)], x * y)
        return result

    def d(self, vec: Mapping[str, Fraction]) -> Vec:
        return self.differential(vec)

    def renamed(self, name: str) -> "Dgla":
        return Dgla(name, self.space, self.structure, self.differential)

    def with_bracket_perturbed(self, a: str, b: str, target: str, delta: ScalarLike) -> "Dgla":
        """Copy with [a,b] changed by delta·target, kept graded antisymmetric."""
        table = dict(self.structure)
        change = Vec.basis(target, delta)
        table[(a, b)] = self.bracket_basis(a, b) + change
        if a != b:
            sign = -koszul_sign(self.degree(a), self.degree(b))
            table[(b, a)] = self.bracket_basis(b, a) + change * sign
        table = {k: v for k, v in table.items() if v}
        return Dgla(f"{self.name}~", self.space, table, self.differential)

    def to_json(self) -> dict:
        index = self.space.index
        brackets = [
            [a, b, c, str(value)]
            for (a, b) in sorted(self.structure, key=lambda k: (index(k[0]), index(k[1])))
            for c, value in sorted(self.structure[(a, b)].items(), key=lambda t: index(t[0]))
        ]
        return {
            "name": self.name,
            "basis": self.space.to_json(),
            "brackets": brackets,
            "differential": [[t, s, str(v)] for t, s, v in self.differential.entries],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Dgla":
        """Inverse of ``to_json``; the table is taken as given."""
        space = GradedSpace(tuple((label, int(degree)) for label, degree in data["basis"]))
        brackets: dict[tuple[str, str], dict[str, Fraction]] = {}
        for a, b, c, value in data["brackets"]:
            brackets.setdefault((a, b), {})[c] = to_scalar(value)
        differential: dict[str, dict[str, Fraction]] = {}
        for tgt, src, value in data["differential"]:
            differential.setdefault(src, {})[tgt] = to_scalar(value)
        return cls.build(data["name"], space, brackets, differential, complete=False)


def _jacobi_chunk(args: tuple["Dgla", Sequence[str]]) -> tuple[Optional[str], int]:
    dgla, chunk = args
    basis = dgla.labels
    count = 0
    for a in chunk:
        pa = dgla.partners(a)
        ea = Vec.basis(a)
        da = dgla.degree(a)
        for b in basis:
            eb = Vec.basis(b)
            pb = dgla.partners(b)
            for c in basis:
                count += 1
                # all three terms vanish unless one of the inner brackets is nonzero
                if c not in pb and b not in pa and c not in pa:
                    continue
                ec = Vec.basis(c)
                lhs = dgla.bracket(ea, dgla.bracket_basis(b, c))
                rhs = dgla.bracket(dgla.bracket_basis(a, b), ec)
                rhs = rhs.add_scaled(
                    dgla.bracket(eb, dgla.bracket_basis(a, c)), koszul_sign(da, dgla.degree(b))
                )
                if lhs != rhs:
                    return f"({a}, {b}, {c})", count
    return None, count


def validate_dgla(dgla: Dgla, workers: int = 1) -> Certificate:
    """
    Exhaustive check of every dgla axiom on basis tuples. Failures are
    recorded with the first offending tuple, never raised.
    """
    cert = Certificate(f"dgla {dgla.name}")
    basis = dgla.labels

    witness = None
    if dgla.differential.degree != 1:
        witness = f"differential has degree {dgla.differential.degree}"
    for (a, b), value in dgla.structure.items():
        if witness is not None:
            break
        if dgla.space.vector_degree(value) != dgla.degree(a) + dgla.degree(b):
            witness = f"[{a},{b}] is not of degree {dgla.degree(a) + dgla.degree(b)}"
    cert.add("homogeneity", witness, len(dgla.structure) + 1)

    witness = None
    for a in basis:
        for b in basis:
            expected = dgla.bracket_basis(b, a) * -koszul_sign(dgla.degree(a), dgla.degree(b))
            if dgla.bracket_basis(a, b) != expected:
                witness = f"({a}, {b})"
                break
        if witness:
            break
    cert.add("antisymmetry", witness, len(basis) ** 2)

    results = ordered_map(
        _jacobi_chunk, [(dgla, chunk) for chunk in chunked(basis, max(workers, 1))], workers
    )
    witness = next((w for w, _ in results if w is not None), None)
    count = len(basis) ** 3 if witness is None else sum(c for _, c in results)
    cert.add("jacobi", witness, count)

    witness = None
    for a in basis:
        da_vec = dgla.d(Vec.basis(a))
        for b in basis:
            lhs = dgla.d(dgla.bracket_basis(a, b))
            rhs = dgla.bracket(da_vec, Vec.basis(b)).add_scaled(
                dgla.bracket(Vec.basis(a), dgla.d(Vec.basis(b))), parity_sign(dgla.degree(a))
            )
            if lhs != rhs:
                witness = f"({a}, {b})"
                break
        if witness:
            break
    cert.add("leibniz", witness, len(basis) ** 2)

    witness = None
    for a in basis:
        if dgla.d(dgla.d(Vec.basis(a))):
            witness = f"d(d({a})) != 0"
            break
    cert.add("d_squared", witness, len(basis))
    return cert


def central_extension(
    base: Dgla,
    name: str,
    center: Sequence[tuple[str, int]],
    cocycle: Mapping[tuple[str, str], Mapping[str, ScalarLike]],
    center_differential: Optional[Mapping[str, Mapping[str, ScalarLike]]] = None,
) -> Dgla:
    """
    base ⊕ center with [a,b] gaining cocycle(a,b) in the center.

    ``cocycle`` lists each unordered pair once; the other order follows by
    graded antisymmetry. Center elements are central; their differential
    is ``center_differential`` and stays inside the center.
    """
    space = base.space.direct_sum(GradedSpace(tuple(center)))
    table: dict[tuple[str, str], Vec] = {k: Vec(v) for k, v in base.structure.items()}
    for (a, b), value in cocycle.items():
        vec = Vec(value)
        if not vec:
            continue
        expected = space.degree(a) + space.degree(b)
        for label in vec:
            if space.degree(label) != expected:
                raise DegreeError(f"{name}: cocycle value on ({a},{b}) leaves degree {expected}")
        table[(a, b)] = table.get((a, b), Vec()) + vec
        if a != b:
            sign = -koszul_sign(space.degree(a), space.degree(b))
            table[(b, a)] = table.get((b, a), Vec()) + vec * sign
    table = {k: v for k, v in table.items() if v}
    columns: dict[str, Vec] = dict(base.differential.columns)
    for label, value in (center_differential or {}).items():
        columns[label] = Vec(value)
    return Dgla(name, space, table, GradedMap(space, space, 1, columns))


def abelian_dgla(name: str, basis: Sequence[tuple[str, int]]) -> Dgla:
    """Zero bracket and zero differential, e.g. the line ℝ[k]."""
    space = GradedSpace(tuple(basis))
    return Dgla(name, space, {}, GradedMap.zero(space, space, 1))
