"""
𝔤-differential spaces: complexes with contractions I(x) and Lie
derivatives L(x) obeying the Cartan relations.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional

from src.dgla.certificate import Certificate
from src.dgla.lie import LieAlgebra
from src.linalg.graded import GradedMap, GradedSpace
from src.linalg.vector import ScalarLike, Vec


def _apply(
    ops: Mapping[str, GradedMap], u: Mapping[str, Fraction], v: Mapping[str, Fraction]
) -> Vec:
    result = Vec()
    for x, coeff in u.items():
        result = result.add_scaled(ops[x](v), coeff)
    return result


@dataclass(frozen=True)
class GDiffSpace:
    """
    Complex ``(space, differential)`` with degree-0 operators ``lie[x]``
    and degree −1 operators ``contraction[x]`` for x in the basis of ``g``.
    """

    name: str
    g: LieAlgebra
    space: GradedSpace
    differential: GradedMap
    lie: dict
    contraction: dict

    @classmethod
    def from_contractions(
        cls,
        name: str,
        g: LieAlgebra,
        space: GradedSpace,
        differential: GradedMap,
        contraction: Mapping[str, GradedMap],
    ) -> "GDiffSpace":
        """Fill in L(x) = d∘I(x) + I(x)∘d."""
        lie = {
            x: differential.compose(op) + op.compose(differential) for x, op in contraction.items()
        }
        return cls(name, g, space, differential, lie, dict(contraction))

    @property
    def labels(self) -> tuple[str, ...]:
        return self.space.labels

    def d(self, v: Mapping[str, Fraction]) -> Vec:
        return self.differential(v)

    def L(self, u: Mapping[str, Fraction], v: Mapping[str, Fraction]) -> Vec:
        return _apply(self.lie, u, v)

    def I(self, u: Mapping[str, Fraction], v: Mapping[str, Fraction]) -> Vec:  # noqa: E743
        return _apply(self.contraction, u, v)

    def is_basic(self, v: Mapping[str, Fraction]) -> Optional[str]:
        """None when every I(x) and L(x) kills v, else the first offending operator."""
        for x in self.g.basis:
            if self.contraction[x](v):
                return f"I({x})"
            if self.lie[x](v):
                return f"L({x})"
        return None

    def shift(self, k: int, name: Optional[str] = None) -> "GDiffSpace":
        """V[k]: degrees move down by k, operators unchanged."""
        shifted = self.space.shift(k)

        def move(m: GradedMap) -> GradedMap:
            return GradedMap(shifted, shifted, m.degree, m.columns)

        return GDiffSpace(
            name or f"{self.name}[{k}]",
            self.g,
            shifted,
            move(self.differential),
            {x: move(op) for x, op in self.lie.items()},
            {x: move(op) for x, op in self.contraction.items()},
        )

    def with_lie_perturbed(
        self, x: str, target: str, source: str, delta: ScalarLike
    ) -> "GDiffSpace":
        op = self.lie[x]
        columns = dict(op.columns)
        columns[source] = op.column(source) + Vec.basis(target, delta)
        lie = dict(self.lie)
        lie[x] = GradedMap(op.source, op.target, op.degree, columns)
        return GDiffSpace(
            f"{self.name}~", self.g, self.space, self.differential, lie, self.contraction
        )


def validate_gdiff(v: GDiffSpace) -> Certificate:
    """Cartan relations on every (x, basis) and (x, y, basis) tuple."""
    cert = Certificate(f"g-differential space {v.name}")
    g, basis = v.g, v.labels

    witness = None
    if v.differential.degree != 1:
        witness = f"differential has degree {v.differential.degree}"
    for x in g.basis:
        if witness is None and v.lie[x].degree != 0:
            witness = f"L({x}) has degree {v.lie[x].degree}"
        if witness is None and v.contraction[x].degree != -1:
            witness = f"I({x}) has degree {v.contraction[x].degree}"
    cert.add("operator_degrees", witness, 2 * g.dim + 1)

    witness = None
    for b in basis:
        if v.d(v.d(Vec.basis(b))):
            witness = f"d(d({b})) != 0"
            break
    cert.add("d_squared", witness, len(basis))

    def pairwise(name: str, relation) -> None:
        found = None
        for x in g.basis:
            for y in g.basis:
                for b in basis:
                    if relation(x, y, Vec.basis(b)):
                        found = f"({x}, {y}, {b})"
                        break
                if found:
                    break
            if found:
                break
        cert.add(name, found, g.dim**2 * len(basis))

    def ll(x: str, y: str, e: Vec) -> bool:
        lhs = v.lie[x](v.lie[y](e)) - v.lie[y](v.lie[x](e))
        return lhs != v.L(g.bracket_basis(x, y), e)

    def li(x: str, y: str, e: Vec) -> bool:
        lhs = v.lie[x](v.contraction[y](e)) - v.contraction[y](v.lie[x](e))
        return lhs != v.I(g.bracket_basis(x, y), e)

    def ii(x: str, y: str, e: Vec) -> bool:
        return bool(v.contraction[x](v.contraction[y](e)) + v.contraction[y](v.contraction[x](e)))

    pairwise("lie_lie", ll)
    pairwise("lie_contraction", li)
    pairwise("contraction_contraction", ii)

    witness = None
    for x in g.basis:
        for b in basis:
            e = Vec.basis(b)
            cartan = v.d(v.contraction[x](e)) + v.contraction[x](v.d(e))
            if v.lie[x](e) != cartan:
                witness = f"({x}, {b})"
                break
        if witness:
            break
    cert.add("cartan", witness, g.dim * len(basis))
    return cert
