"""
Shipped catalogue: Lie algebras, CDGA models, 𝔤-differential spaces,
cocycle data, and the name resolver used by the CLI.
"""

import re
from functools import lru_cache
from fractions import Fraction
from typing import Callable, Optional

from src.cocycles.chevalley import invariant_forms
from src.constructions.cone import L, cone, dual_cone_module
from src.constructions.extensions import (
    CocycleKind,
    CocycleSpec,
    central_extension_cone,
    cone_alpha_extension,
    decompose_alpha,
)
from src.constructions.semidirect import deform_by_e, fms_tower, sigma_dgla
from src.dgla.cdga import Cdga, cdga_tensor, exterior_algebra, exterior_contraction
from src.dgla.dgla import Dgla, abelian_dgla
from src.dgla.gdiff import GDiffSpace
from src.dgla.lie import Form, LieAlgebra, matrix_lie_algebra, trace, trace_form
from src.linalg.graded import GradedSpace

SIGMA_H = {"abc": 1}
SIGMA_K = 1
CE_ELEMENT = {"ab": 1}


def _unit_matrix(size: int, i: int, j: int) -> list[list[int]]:
    return [[1 if (r, c) == (i, j) else 0 for c in range(size)] for r in range(size)]


def _sl3() -> LieAlgebra:
    gens = {}
    for i, j in [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]:
        gens[f"e{i + 1}{j + 1}"] = _unit_matrix(3, i, j)
    gens["h1"] = [[1, 0, 0], [0, -1, 0], [0, 0, 0]]
    gens["h2"] = [[0, 0, 0], [0, 1, 0], [0, 0, -1]]
    return matrix_lie_algebra("sl3", gens)


LIE_FIXTURES: dict[str, Callable[[], LieAlgebra]] = {
    "ab1": lambda: LieAlgebra.abelian("ab1", ["x"]),
    "ab2": lambda: LieAlgebra.abelian("ab2", ["x", "y"]),
    "ab3": lambda: LieAlgebra.abelian("ab3", ["e1", "e2", "e3"]),
    "heis3": lambda: LieAlgebra.from_brackets("heis3", ["x", "y", "z"], {("x", "y"): {"z": 1}}),
    "sl2": lambda: matrix_lie_algebra(
        "sl2",
        {"e": [[0, 1], [0, 0]], "f": [[0, 0], [1, 0]], "h": [[1, 0], [0, -1]]},
    ),
    "gl2": lambda: matrix_lie_algebra(
        "gl2", {f"e{i + 1}{j + 1}": _unit_matrix(2, i, j) for i in range(2) for j in range(2)}
    ),
    "sl3": _sl3,
}


def _intv() -> Cdga:
    space = GradedSpace((("1", 0), ("ε", 0), ("η", 1)))
    return Cdga.build("Intv", space, {}, {"ε": {"η": 1}})


def _sq() -> Cdga:
    """Truncated square: a nonexact 1-form x·dy and nothing above degree 2."""
    space = GradedSpace(
        (("1", 0), ("x", 0), ("y", 0), ("dx", 1), ("dy", 1), ("xdy", 1), ("dxdy", 2))
    )
    products = {
        ("x", "dy"): {"xdy": 1},
        ("y", "dx"): {"xdy": -1},
        ("dx", "dy"): {"dxdy": 1},
    }
    differential = {"x": {"dx": 1}, "y": {"dy": 1}, "xdy": {"dxdy": 1}}
    return Cdga.build("Sq", space, products, differential)


CDGA_FIXTURES: dict[str, Callable[[], Cdga]] = {
    "Pt": lambda: Cdga.build("Pt", GradedSpace((("1", 0),)), {}),
    "Circ": lambda: exterior_algebra("Circ", ["θ"]),
    "Intv": _intv,
    "T2": lambda: exterior_algebra("T2", ["a", "b"]),
    "T3": lambda: exterior_algebra("T3", ["a", "b", "c"]),
    "CircIntv": lambda: cdga_tensor(cdga("Circ"), cdga("Intv"), "CircIntv"),
    "FmsS": lambda: cdga_tensor(cdga("T3"), cdga("Intv"), "FmsS"),
    "Sq": _sq,
}


@lru_cache(maxsize=None)
def lie(name: str) -> LieAlgebra:
    try:
        return LIE_FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown Lie algebra fixture {name!r}") from None


@lru_cache(maxsize=None)
def cdga(name: str) -> Cdga:
    try:
        return CDGA_FIXTURES[name]()
    except KeyError:
        raise KeyError(f"unknown CDGA fixture {name!r}") from None


def contraction_module(
    c: Cdga, g: LieAlgebra, pairing: dict[str, dict[str, int]], name: str
) -> GDiffSpace:
    """
    Exterior algebra c as a 𝔤-differential space: I(x) contracts generator
    a with pairing[x][a], d is that of c, L(x) = dI(x) + I(x)d.
    """
    contraction = {x: exterior_contraction(c, pairing.get(x, {})) for x in g.basis}
    return GDiffSpace.from_contractions(name, g, c.space, c.differential, contraction)


@lru_cache(maxsize=None)
def sigma_module() -> GDiffSpace:
    """Λ(a,b,c) with ℝ³ acting by I(e_i) = contraction with the i-th generator."""
    pairing = {"e1": {"a": 1}, "e2": {"b": 1}, "e3": {"c": 1}}
    return contraction_module(cdga("T3"), lie("ab3"), pairing, "T3")


def perturbed_sigma_module() -> GDiffSpace:
    """L(e1) altered on a, breaking the Cartan relation."""
    return sigma_module().with_lie_perturbed("e1", "a", "a", 1)


def _first_two(g: LieAlgebra) -> tuple[str, str]:
    return g.basis[0], g.basis[1 % g.dim]


def default_p(g: LieAlgebra) -> Form:
    """Invariant symmetric bilinear form: trace form, identity on abelian, else first invariant."""
    if g.matrices:
        return trace_form(g)
    if g.is_abelian():
        return Form.from_entries(2, {(x, x): 1 for x in g.basis})
    forms = invariant_forms(g, 2)
    return forms[0] if forms else Form.zero(2)


def default_gamma(g: LieAlgebra) -> Form:
    """Skew γ(x,y) = λ(x)y on the first two basis vectors, zero when not a cocycle."""
    if g.dim < 2 or g.matrices:
        return Form.zero(2)
    x, y = _first_two(g)
    return Form.skew({(x, y): 1})


def default_alpha(g: LieAlgebra) -> Form:
    """
    A coadjoint 1-cocycle α(x)y. Abelian: generic, with both parts nonzero.
    Otherwise the coboundary x ↦ ad*_x ξ for ξ dual to the last basis vector,
    plus tr(x)tr(y) for matrix algebras (zero on traceless ones).
    """
    if g.is_abelian() and g.dim >= 2:
        x, y = _first_two(g)
        return Form.from_entries(2, {(x, x): 1, (x, y): 2, (y, y): 3})
    last = g.basis[-1]
    values: dict[tuple[str, str], Fraction] = {}
    for x in g.basis:
        for y in g.basis:
            value = -g.bracket_basis(x, y).coefficient(last)
            if g.matrices:
                value += trace(g.matrices[x]) * trace(g.matrices[y])
            values[(x, y)] = value
    return Form.from_entries(2, values)


def default_p3(g: LieAlgebra) -> Form:
    if g.matrices:
        return trace_form(g, 3)
    if g.is_abelian():
        x, y = _first_two(g)
        if x == y:
            return Form.symmetric(3, {(x, x, x): 1})
        return Form.symmetric(3, {(x, x, y): 1, (y, y, y): 2})
    forms = invariant_forms(g, 3)
    return forms[0] if forms else Form.zero(3)


def non_invariant_p(g: LieAlgebra) -> Form:
    """A symmetric form failing invariance on sl2-like algebras: p(h,h) = 1 only."""
    return Form.symmetric(2, {(g.basis[-1], g.basis[-1]): 1})


def sigma_model() -> Dgla:
    return sigma_dgla(sigma_module(), SIGMA_H, SIGMA_K, "sigma(T3)")


def ce_model() -> Dgla:
    """C_e𝔤 over Λ(a,b,c)[1] with e = a∧b in degree 1."""
    return deform_by_e(lie("ab3"), sigma_module().shift(1), CE_ELEMENT, "Ce(sigma)")


def perturbed_cone() -> Dgla:
    """cone(sl2) with [L(h), L(e)] = 3L(e): Jacobi fails."""
    return cone(lie("sl2")).with_bracket_perturbed(L("h"), L("e"), L("e"), 1)


def line(label: str, degree: int) -> Dgla:
    """ℝ[k] spanned by one element of degree −k."""
    return abelian_dgla(f"R[{-degree}]", [(label, degree)])


def _cone_builder(kind: str) -> Callable[[LieAlgebra], Dgla]:
    def build(g: LieAlgebra) -> Dgla:
        if kind == "cone":
            return cone(g)
        if kind == "Cgamma":
            return central_extension_cone(g, CocycleSpec(CocycleKind.LAMBDA, default_gamma(g)))
        if kind == "Cp":
            return central_extension_cone(g, CocycleSpec(CocycleKind.P, default_p(g)))
        if kind == "Calpha":
            return cone_alpha_extension(decompose_alpha(g, default_alpha(g)))
        if kind == "B":
            return fms_tower(g, default_p3(g))[0]
        return fms_tower(g, default_p3(g))[1]

    return build


DGLA_KINDS = ("cone", "Cgamma", "Cp", "Calpha", "B", "Bfms")
SPECIAL_DGLAS: dict[str, Callable[[], Dgla]] = {
    "sigma(T3)": sigma_model,
    "Ce(sigma)": ce_model,
    "cone(sl2)~": perturbed_cone,
}
EXPRESSION = re.compile(r"^(\w+)\((\w+)\)$")


@lru_cache(maxsize=None)
def dgla(name: str) -> Dgla:
    """Resolve `cone(g)`, `Cgamma(g)`, `Cp(g)`, `Calpha(g)`, `B(g)`, `Bfms(g)` and specials."""
    if name in SPECIAL_DGLAS:
        return SPECIAL_DGLAS[name]()
    match = EXPRESSION.match(name)
    if not match or match.group(1) not in DGLA_KINDS:
        raise KeyError(f"unknown dgla {name!r}")
    return _cone_builder(match.group(1))(lie(match.group(2)))


@lru_cache(maxsize=None)
def gdiff(name: str) -> GDiffSpace:
    """`dualcone(g)`, `T3` (the sigma-model action) or `T3~` (Cartan-broken)."""
    if name == "T3":
        return sigma_module()
    if name == "T3~":
        return perturbed_sigma_module()
    match = EXPRESSION.match(name)
    if match and match.group(1) == "dualcone":
        return dual_cone_module(lie(match.group(2)))
    raise KeyError(f"unknown g-differential space {name!r}")


def catalogue() -> dict[str, list[str]]:
    """Names accepted by the resolvers, grouped by kind."""
    lies = list(LIE_FIXTURES)
    return {
        "lie_algebras": lies,
        "cdgas": list(CDGA_FIXTURES),
        "dglas": [f"{kind}({g})" for kind in DGLA_KINDS for g in lies] + list(SPECIAL_DGLAS),
        "gdiff_spaces": [f"dualcone({g})" for g in lies] + ["T3", "T3~"],
    }


def resolve(name: str) -> Optional[object]:
    """Any catalogue object by name, or None."""
    for lookup in (lie, cdga, dgla, gdiff):
        try:
            return lookup(name)
        except KeyError:
            continue
    return None
