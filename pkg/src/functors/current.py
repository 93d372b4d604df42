"""
The current-algebra functors CA (degree −1 modulo exact, derived bracket)
and SA (closed degree 0, plain bracket) on Ω(S)⊗A.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Mapping

from src.dgla.cdga import Cdga
from src.dgla.certificate import Certificate
from src.dgla.dgla import Dgla
from src.dgla.errors import InternalConsistencyError
from src.dgla.lie import LieAlgebra, validate_lie
from src.dgla.tensor import tensor_dgla
from src.linalg.echelon import SubquotientBasis, kernel, quotient, span
from src.linalg.graded import GradedMap, GradedSpace, tensor_label
from src.linalg.vector import Vec


class Functor(str, Enum):
    """Which current-algebra functor produced an algebra."""

    CA = "CA"
    SA = "SA"


@dataclass(frozen=True)
class CurrentAlgebra:
    """
    A Lie algebra on an explicit subquotient of Ω(S)⊗A; ``structure`` is
    keyed by pairs of subquotient labels.
    """

    name: str
    functor: Functor
    model: Cdga
    source: Dgla
    total: Dgla
    basis: SubquotientBasis
    structure: dict

    @property
    def labels(self) -> tuple[str, ...]:
        return self.basis.labels

    @property
    def dim(self) -> int:
        return self.basis.dim

    def bracket(self, u: Mapping[str, Fraction], v: Mapping[str, Fraction]) -> Vec:
        result = Vec()
        for a, x in u.items():
            for b, y in v.items():
                value = self.structure.get((a, b))
                if value:
                    result = result.add_scaled(value, x * y)
        return result

    def ambient_bracket(self, x: Mapping[str, Fraction], y: Mapping[str, Fraction]) -> Vec:
        """Bracket of ambient representatives, before projection."""
        if self.functor is Functor.CA:
            return derived_bracket(self.total, x, y)
        return self.total.bracket(x, y)

    def project(self, vec: Mapping[str, Fraction]) -> Vec:
        return self.basis.project(vec)

    def lift(self, vec: Mapping[str, Fraction]) -> Vec:
        return self.basis.lift(vec)

    def as_lie(self) -> LieAlgebra:
        return LieAlgebra(self.name, self.labels, dict(self.structure))

    def to_json(self) -> dict:
        data = self.as_lie().to_json()
        data["functor"] = self.functor.value
        data["representatives"] = {
            label: self.lift(Vec.basis(label)).to_json() for label in self.labels
        }
        return data


def derived_bracket(total: Dgla, x: Mapping[str, Fraction], y: Mapping[str, Fraction]) -> Vec:
    """[x, y]_d = [x, dy]."""
    return total.bracket(x, total.d(y))


def _restricted_differential(total: Dgla, degree: int) -> GradedMap:
    """d from degree ``degree`` to ``degree + 1`` as a map of standalone spaces."""
    source, target = degree_space(total, degree), degree_space(total, degree + 1)
    columns = {l: total.differential.column(l) for l in source.labels}
    return GradedMap(source, target, 1, columns)


def degree_space(total: Dgla, degree: int) -> GradedSpace:
    return GradedSpace(tuple((l, degree) for l in total.space.in_degree(degree)))


def ca(s: Cdga, a: Dgla, name: str = "") -> CurrentAlgebra:
    """
    CA(S, A) = (Ω(S)⊗A)^{-1} / d(Ω(S)⊗A)^{-2} with the derived bracket.

    Raises ``InternalConsistencyError`` if the bracket does not descend.
    """
    total = tensor_dgla(s, a)
    ambient = degree_space(total, -1)
    exact = span(ambient, [total.d(Vec.basis(l)) for l in total.space.in_degree(-2)])
    basis = quotient(ambient, exact)
    for z in exact.labels:
        z_vec = exact.lift(Vec.basis(z))
        for y in ambient.labels:
            value = basis.project(derived_bracket(total, z_vec, Vec.basis(y)))
            if value:
                raise InternalConsistencyError(f"derived bracket does not descend: [{z}, {y}]_d")
            value = basis.project(derived_bracket(total, Vec.basis(y), z_vec))
            if value:
                raise InternalConsistencyError(f"derived bracket does not descend: [{y}, {z}]_d")
    structure = _structure(basis, lambda x, y: derived_bracket(total, x, y))
    name = name or f"CA({s.name},{a.name})"
    return CurrentAlgebra(name, Functor.CA, s, a, total, basis, structure)


def sa(s: Cdga, a: Dgla, name: str = "") -> CurrentAlgebra:
    """SA(S, A) = closed elements of (Ω(S)⊗A)^0 with the plain bracket."""
    total = tensor_dgla(s, a)
    basis = kernel(_restricted_differential(total, 0))
    for x, y in product(basis.labels, repeat=2):
        value = total.bracket(basis.lift(Vec.basis(x)), basis.lift(Vec.basis(y)))
        if not basis.contains(value):
            raise InternalConsistencyError(
                f"closed elements not closed under the bracket: ({x}, {y})"
            )
    structure = _structure(basis, total.bracket)
    name = name or f"SA({s.name},{a.name})"
    return CurrentAlgebra(name, Functor.SA, s, a, total, basis, structure)


def _structure(basis: SubquotientBasis, bracket) -> dict[tuple[str, str], Vec]:
    table: dict[tuple[str, str], Vec] = {}
    for x, y in product(basis.labels, repeat=2):
        value = basis.project(bracket(basis.lift(Vec.basis(x)), basis.lift(Vec.basis(y))))
        if value:
            table[(x, y)] = value
    return table


def validate_current(algebra: CurrentAlgebra) -> Certificate:
    """Antisymmetry and Jacobi on the subquotient basis."""
    cert = validate_lie(algebra.as_lie())
    cert.subject = f"{algebra.functor.value} {algebra.name}"
    witness = None if algebra.basis.round_trip_holds() else "projection∘section != id"
    cert.add("round_trip", witness, algebra.dim)
    return cert


def current_lie(s: Cdga, g: LieAlgebra) -> LieAlgebra:
    """A⁰(S)⊗𝔤 with the pointwise bracket [φ⊗x, ψ⊗y] = φψ⊗[x,y]."""
    functions = s.space.in_degree(0)
    basis = tuple(tensor_label(phi, x) for phi in functions for x in g.basis)
    table: dict[tuple[str, str], Vec] = {}
    for phi, psi in product(functions, repeat=2):
        prod_ = s.product_basis(phi, psi)
        if not prod_:
            continue
        for (x, y), value in g.structure.items():
            entry = Vec(
                (tensor_label(chi, z), c * v) for chi, c in prod_.items() for z, v in value.items()
            )
            if entry:
                table[(tensor_label(phi, x), tensor_label(psi, y))] = entry
    return LieAlgebra(f"{s.name}⊗{g.name}", basis, table)
