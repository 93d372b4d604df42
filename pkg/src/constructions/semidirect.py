"""
(ω, δ)-deformed semidirect products C𝔤 ⋉_ω V with differential
d̃ = d + δ, the C_e𝔤 deformation, the truncated FMS tower and the
sigma-model dgla.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Mapping, Optional

from src.constructions.cone import I, L, cone, cone_parts, dual_cone_module, ell, iota
from src.dgla.dgla import Dgla, central_extension, koszul_sign, parity_sign
from src.dgla.errors import ConstructionRejected, DegreeError
from src.dgla.gdiff import GDiffSpace
from src.dgla.lie import Form, LieAlgebra, dual_label, invariance_defect
from src.linalg.graded import GradedMap
from src.linalg.vector import ScalarLike, Vec

C4 = "c4"


@dataclass(frozen=True)
class ExtensionDatum:
    """
    ω: pairs of cone labels → V (one order per unordered pair) and
    δ: cone label → V of degree +1.
    """

    omega: dict = field(default_factory=dict)
    delta: dict = field(default_factory=dict)

    @classmethod
    def zero(cls) -> "ExtensionDatum":
        return cls({}, {})


def action(v: GDiffSpace, cone_label: str, w: Mapping[str, Fraction]) -> Vec:
    """a·w for a = L(x) or I(x)."""
    kind, x = cone_parts(cone_label)
    ops = v.lie if kind == "L" else v.contraction
    return ops[x](w)


def _semidirect_table(g: LieAlgebra, v: GDiffSpace, omega: Mapping) -> tuple[Dgla, dict]:
    base = cone(g)
    for label in v.labels:
        if label in base.space:
            raise ConstructionRejected("module label collides with a cone label", label)
    space = base.space.direct_sum(v.space)
    table: dict[tuple[str, str], Vec] = {k: Vec(val) for k, val in base.structure.items()}

    def add(a: str, b: str, value: Vec) -> None:
        if value:
            table[(a, b)] = table.get((a, b), Vec()) + value

    for (a, b), value in omega.items():
        value = Vec(value)
        expected = space.degree(a) + space.degree(b)
        for label in value:
            if space.degree(label) != expected:
                raise DegreeError(f"omega({a},{b}) leaves degree {expected}")
        add(a, b, value)
        if a != b:
            add(b, a, value * -koszul_sign(space.degree(a), space.degree(b)))
    for a in base.labels:
        for w in v.labels:
            value = action(v, a, Vec.basis(w))
            add(a, w, value)
            add(w, a, value * -koszul_sign(space.degree(a), space.degree(w)))
    table = {k: val for k, val in table.items() if val}
    return base, table


def semidirect(
    g: LieAlgebra,
    v: GDiffSpace,
    ext: ExtensionDatum,
    name: Optional[str] = None,
) -> Dgla:
    """
    (C𝔤 ⋉_ω V)_(δ) with [(a,v),(b,w)] = ([a,b], a·w − b·v + ω(a,b)) and
    d̃(a, v) = (da + δa, dv). The closedness triple is checked as Jacobi
    on cone triples, Leibniz on cone pairs and d̃² = 0 on the cone.
    """
    base, table = _semidirect_table(g, v, ext.omega)
    space = base.space.direct_sum(v.space)
    columns: dict[str, Vec] = {}
    for a in base.labels:
        image = base.differential.column(a) + Vec(ext.delta.get(a, {}))
        for label in image:
            if space.degree(label) != space.degree(a) + 1:
                raise DegreeError(f"delta({a}) is not of degree {space.degree(a) + 1}")
        columns[a] = image
    for w in v.labels:
        columns[w] = v.differential.column(w)
    differential = GradedMap(space, space, 1, columns)
    dgla = Dgla(name or f"{base.name}⋉{v.name}", space, table, differential)
    _check_closedness(dgla, base.labels)
    return dgla


def _check_closedness(dgla: Dgla, cone_labels: tuple[str, ...]) -> None:
    for a in cone_labels:
        ea = Vec.basis(a)
        for b in cone_labels:
            eb = Vec.basis(b)
            for c in cone_labels:
                ec = Vec.basis(c)
                lhs = dgla.bracket(ea, dgla.bracket(eb, ec))
                rhs = dgla.bracket(dgla.bracket(ea, eb), ec).add_scaled(
                    dgla.bracket(eb, dgla.bracket(ea, ec)),
                    koszul_sign(dgla.degree(a), dgla.degree(b)),
                )
                if lhs != rhs:
                    raise ConstructionRejected("d_Cg(omega) != 0", f"({a}, {b}, {c})")
    for a in cone_labels:
        ea = Vec.basis(a)
        for b in cone_labels:
            eb = Vec.basis(b)
            lhs = dgla.d(dgla.bracket(ea, eb))
            rhs = dgla.bracket(dgla.d(ea), eb).add_scaled(
                dgla.bracket(ea, dgla.d(eb)), parity_sign(dgla.degree(a))
            )
            if lhs != rhs:
                raise ConstructionRejected("d_Cg(delta) + d(omega) != 0", f"({a}, {b})")
    for a in cone_labels:
        if dgla.d(dgla.d(Vec.basis(a))):
            raise ConstructionRejected("d(delta) != 0", a)


def deform_by_e(
    g: LieAlgebra, v: GDiffSpace, e: Mapping[str, ScalarLike], name: Optional[str] = None
) -> Dgla:
    """
    C_e𝔤 = (C𝔤 ⋉ V)_(e): δI(x) = −I(x)e and δL(x) = L(x)e, so
    d̃I(x) = L(x) − I(x)e and d̃L(x) = L(x)e. Needs de basic.
    """
    return semidirect(g, v, e_datum(g, v, e), name or f"C_e({g.name},{v.name})")


def e_datum(g: LieAlgebra, v: GDiffSpace, e: Mapping[str, ScalarLike]) -> ExtensionDatum:
    """(ω, δ) = (0, δ_e) after checking that e has degree 1 and de is basic."""
    e = Vec(e)
    if e and v.space.vector_degree(e) != 1:
        raise DegreeError(f"e must lie in degree 1 of {v.name}")
    de = v.d(e)
    for x in g.basis:
        if v.contraction[x](de):
            raise ConstructionRejected("de is not basic", f"I({x}) de != 0")
        if v.lie[x](de):
            raise ConstructionRejected("de is not basic", f"L({x}) de != 0")
    delta: dict[str, Vec] = {}
    for x in g.basis:
        delta[I(x)] = -v.contraction[x](e)
        delta[L(x)] = v.lie[x](e)
    return ExtensionDatum({}, delta)


def fms_omega(g: LieAlgebra, p3: Form) -> dict:
    """ω(I(x), I(y)) = ℓ(p(x, y, ·)) in the shifted dual cone."""
    omega: dict[tuple[str, str], Vec] = {}
    for x, y in combinations_with_replacement(g.basis, 2):
        value = Vec((ell(dual_label(z)), p3(x, y, z)) for z in g.basis)
        if value:
            omega[(I(x), I(y))] = value
    return omega


def fms_tower(g: LieAlgebra, p3: Form) -> tuple[Dgla, Dgla]:
    """
    B = C𝔤 ⋉_ω C𝔤*[2] and B_FMS, its central extension by ℝ[4] along
    (I(x), ι(ξ)) ↦ ξ(x).
    """
    if p3.arity != 3 or not p3.is_symmetric():
        raise ConstructionRejected("p3 must be a symmetric 3-form", f"arity {p3.arity}")
    witness = invariance_defect(g, p3)
    if witness:
        raise ConstructionRejected("p3 is not invariant", witness)
    module = dual_cone_module(g).shift(2)
    b = semidirect(g, module, ExtensionDatum(fms_omega(g, p3), {}), f"B({g.name})")
    cocycle = {(I(x), iota(dual_label(x))): {C4: 1} for x in g.basis}
    b_fms = central_extension(b, f"Bfms({g.name})", [(C4, -4)], cocycle)
    return b, b_fms


def sigma_dgla(
    v: GDiffSpace, h: Mapping[str, ScalarLike], k: int, name: Optional[str] = None
) -> Dgla:
    """
    (C𝔤 ⋉ Ω(M)[k+1])_(H): H closed of degree k+2 in the unshifted model,
    so it sits in degree 1 after the shift and deforms d̃I(x) = L(x) − i_x H.
    """
    h = Vec(h)
    if h:
        degree = v.space.vector_degree(h)
        if degree != k + 2:
            raise DegreeError(f"H has degree {degree}, expected k+2 = {k + 2}")
        if v.d(h):
            raise ConstructionRejected("H is not closed", str(v.d(h).to_json()))
    shifted = v.shift(k + 1)
    return deform_by_e(v.g, shifted, h, name or f"sigma({v.name})")
