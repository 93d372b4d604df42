"""
Central extensions of the cone C𝔤 by ℝ[k], and the two-dimensional
extension C_α𝔤 built from a coadjoint 1-cocycle α.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Optional

from src.constructions.cone import I, L, cone
from src.dgla.dgla import Dgla, central_extension
from src.dgla.errors import ConstructionRejected, InternalConsistencyError
from src.dgla.lie import Form, LieAlgebra, invariance_defect

C1, C2 = "c1", "c2"


class CocycleKind(str, Enum):
    """Degree k of the central line ℝ[k]."""

    RHO = "rho"
    LAMBDA = "lambda"
    P = "p"

    @property
    def shift(self) -> int:
        return {"rho": 0, "lambda": 1, "p": 2}[self.value]


@dataclass(frozen=True)
class CocycleSpec:
    """
    Data of a one-dimensional central extension of C𝔤.

    For ``LAMBDA`` the form is γ(x, y) = λ(x)y; for ``RHO`` and ``P`` it is
    the bilinear form itself.
    """

    kind: CocycleKind
    form: Form


def lambda_cocycle_defect(g: LieAlgebra, gamma: Form) -> Optional[str]:
    """First (x, y, z) where λ(x)[y,z] ≠ λ([x,y])z + λ(y)[x,z]."""
    for x, y, z in product(g.basis, repeat=3):
        lhs = gamma.evaluate({x: Fraction(1)}, g.bracket_basis(y, z))
        rhs = gamma.evaluate(g.bracket_basis(x, y), {z: Fraction(1)})
        rhs += gamma.evaluate({y: Fraction(1)}, g.bracket_basis(x, z))
        if lhs != rhs:
            return f"({x}, {y}, {z})"
    return None


def ce_two_cocycle_defect(g: LieAlgebra, rho: Form) -> Optional[str]:
    """First triple where (d_CE ρ)(x,y,z) = −ρ([x,y],z) + ρ([x,z],y) − ρ([y,z],x) ≠ 0."""
    for x, y, z in product(g.basis, repeat=3):
        ex, ey, ez = ({w: Fraction(1)} for w in (x, y, z))
        value = (
            -rho.evaluate(g.bracket_basis(x, y), ez)
            + rho.evaluate(g.bracket_basis(x, z), ey)
            - rho.evaluate(g.bracket_basis(y, z), ex)
        )
        if value:
            return f"({x}, {y}, {z})"
    return None


def central_extension_cone(g: LieAlgebra, spec: CocycleSpec) -> Dgla:
    """
    C𝔤 ⊕ ℝ[k] with the displayed cocycle:

        k=1: [L(x), I(y)] += λ(x)y c1    (λ skew, coadjoint 1-cocycle)
        k=2: [I(x), I(y)] += p(x,y) c2   (p symmetric invariant)

    k=0 only admits ρ = 0: a nonzero ρ on [L, L] breaks Leibniz against dI = L.
    """
    base = cone(g)
    form = spec.form
    if spec.kind is CocycleKind.RHO:
        witness = ce_two_cocycle_defect(g, form)
        if witness:
            raise ConstructionRejected("rho is not a 2-cocycle", witness)
        if form.values:
            key, value = sorted(form.values.items())[0]
            raise ConstructionRejected(
                "a degree-0 central extension of the cone is not a dgla unless rho vanishes",
                f"rho{key} = {value}",
            )
        return central_extension(base, f"C_rho({g.name})", [("c0", 0)], {})

    if spec.kind is CocycleKind.LAMBDA:
        if not form.is_skew():
            raise ConstructionRejected(
                "lambda(x)y is not skew-symmetric",
                f"symmetric part {form.symmetric_part().to_json()}",
            )
        witness = lambda_cocycle_defect(g, form)
        if witness:
            raise ConstructionRejected("lambda is not a coadjoint 1-cocycle", witness)
        cocycle = {(L(x), I(y)): {C1: value} for (x, y), value in form.values.items()}
        return central_extension(base, f"C_gamma({g.name})", [(C1, -1)], cocycle)

    if not form.is_symmetric():
        raise ConstructionRejected("p is not symmetric", f"skew part {form.skew_part().to_json()}")
    witness = invariance_defect(g, form)
    if witness:
        raise ConstructionRejected("p is not invariant", witness)
    cocycle = {
        (I(x), I(y)): {C2: value} for (x, y), value in form.values.items() if x <= y
    }
    return central_extension(base, f"C_p({g.name})", [(C2, -2)], cocycle)


@dataclass(frozen=True)
class AlphaDatum:
    """α: 𝔤 → 𝔤* as the form α(x)y, split into symmetric p and skew ω."""

    g: LieAlgebra
    alpha: Form
    p: Form
    omega: Form
    is_cocycle: bool
    p_invariant: bool
    witness: Optional[str] = None


def alpha_cocycle_defect(g: LieAlgebra, alpha: Form) -> Optional[str]:
    """
    First (x, y, z) with (d_𝔤α)(x,y)z ≠ 0, where
    (d_𝔤α)(x,y)z = −α(y)[x,z] + α(x)[y,z] − α([x,y])z.
    """
    for x, y, z in product(g.basis, repeat=3):
        ex, ey, ez = ({w: Fraction(1)} for w in (x, y, z))
        value = (
            -alpha.evaluate(ey, g.bracket_basis(x, z))
            + alpha.evaluate(ex, g.bracket_basis(y, z))
            - alpha.evaluate(g.bracket_basis(x, y), ez)
        )
        if value:
            return f"({x}, {y}, {z}): {value}"
    return None


def decompose_alpha(g: LieAlgebra, alpha: Form) -> AlphaDatum:
    """
    p = (α+αᵀ)/2 and ω = (α−αᵀ)/2. A cocycle α always has invariant p;
    the converse needs p([x,y],z) = −(d_𝔤ω)(x,y,z) as well.
    """
    p, omega = alpha.symmetric_part(), alpha.skew_part()
    witness = alpha_cocycle_defect(g, alpha)
    is_cocycle = witness is None
    p_invariant = invariance_defect(g, p) is None
    if is_cocycle and not p_invariant:
        raise InternalConsistencyError(
            f"alpha is a cocycle on {g.name} but its symmetric part is not invariant"
        )
    return AlphaDatum(g, alpha, p, omega, is_cocycle, p_invariant, witness)


def cone_alpha_extension(datum: AlphaDatum) -> Dgla:
    """
    C𝔤 ⊕ ℝ[1] ⊕ ℝ[2] with d c2 = c1 and

        [L(x), I(y)] += α(x)y c1
        [I(x), I(y)] += (α(x)y + α(y)x) c2
    """
    if not datum.is_cocycle:
        raise ConstructionRejected("alpha is not a coadjoint 1-cocycle", datum.witness or "")
    g, alpha = datum.g, datum.alpha
    cocycle: dict[tuple[str, str], dict[str, Fraction]] = {}
    for (x, y), value in alpha.values.items():
        cocycle[(L(x), I(y))] = {C1: value}
    for x, y in product(g.basis, repeat=2):
        if x > y:
            continue
        value = alpha(x, y) + alpha(y, x)
        if value:
            cocycle[(I(x), I(y))] = {C2: value}
    return central_extension(
        cone(g), f"C_alpha({g.name})", [(C1, -1), (C2, -2)], cocycle, {C2: {C1: 1}}
    )
