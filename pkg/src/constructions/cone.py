"""
The cone C𝔤 and the dual cone C𝔤* as a 𝔤-differential space.
"""

from fractions import Fraction
from typing import Mapping

from src.dgla.dgla import Dgla
from src.dgla.gdiff import GDiffSpace
from src.dgla.lie import LieAlgebra
from src.linalg.graded import GradedMap, GradedSpace
from src.linalg.vector import Vec


def L(x: str) -> str:
    return f"L({x})"


def I(x: str) -> str:  # noqa: E743
    return f"I({x})"


def ell(xi: str) -> str:
    return f"l({xi})"


def iota(xi: str) -> str:
    return f"i({xi})"


def cone_parts(label: str) -> tuple[str, str]:
    """("L", x) or ("I", x) for a cone label."""
    if len(label) < 4 or label[1] != "(" or not label.endswith(")"):
        raise ValueError(f"{label!r} is not a cone label")
    return label[0], label[2:-1]


def wrap(kind: str, u: Mapping[str, Fraction]) -> Vec:
    """Vector over 𝔤 → the same vector over L(·) or I(·) labels."""
    make = {"L": L, "I": I, "l": ell, "i": iota}[kind]
    return Vec((make(x), c) for x, c in u.items())


def cone(g: LieAlgebra) -> Dgla:
    """C𝔤: L(x) in degree 0, I(x) in degree −1, dI(x) = L(x)."""
    space = GradedSpace(tuple((L(x), 0) for x in g.basis) + tuple((I(x), -1) for x in g.basis))
    brackets: dict[tuple[str, str], Vec] = {}
    for (x, y), value in g.structure.items():
        brackets[(L(x), L(y))] = wrap("L", value)
        brackets[(L(x), I(y))] = wrap("I", value)
    differential = {I(x): {L(x): 1} for x in g.basis}
    return Dgla.build(f"cone({g.name})", space, brackets, differential)


def dual_cone_module(g: LieAlgebra) -> GDiffSpace:
    """
    C𝔤*: ℓ(ξ) in degree 0 and ι(ξ) in degree −1 with dι(ξ) = ℓ(ξ),
    I(x)ℓ(ξ) = ι(ad*_x ξ) and I(x)ι(ξ) = 0.
    """
    duals = g.dual_basis
    space = GradedSpace(tuple((ell(xi), 0) for xi in duals) + tuple((iota(xi), -1) for xi in duals))
    differential = GradedMap(space, space, 1, {iota(xi): {ell(xi): 1} for xi in duals})
    contraction = {}
    for x in g.basis:
        columns = {ell(xi): wrap("i", g.coadjoint(x, Vec.basis(xi))) for xi in duals}
        contraction[x] = GradedMap(space, space, -1, columns)
    return GDiffSpace.from_contractions(f"dualcone({g.name})", g, space, differential, contraction)

