"""
Closed-form characteristic cocycles of the current-algebra extensions.

Every evaluator maps a pair of current labels φ⊗x, ψ⊗y to an ambient
vector of Ω(S)⊗(extension); ``normalized`` pushes the values through the
same canonical projection as the extracted cocycle so the two can be
compared coefficient by coefficient.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Mapping, Optional

from src.cocycles.extract import Cocycle2, ExtensionSplitting, normalize
from src.constructions.cone import I, L, cone_parts, dual_cone_module, wrap
from src.constructions.extensions import C1, C2, AlphaDatum
from src.constructions.semidirect import (
    C4,
    ExtensionDatum,
    action,
    e_datum,
    fms_omega,
    fms_tower,
    semidirect,
    sigma_dgla,
)
from src.dgla.cdga import Cdga
from src.dgla.certificate import Certificate
from src.dgla.dgla import Dgla, koszul_sign, parity_sign
from src.dgla.gdiff import GDiffSpace
from src.dgla.lie import Form, LieAlgebra, dual_label
from src.dgla.tensor import pure, split_label, tensor_bilinear, tensor_vector
from src.functors.current import CurrentAlgebra
from src.linalg.graded import tensor_label
from src.linalg.vector import ScalarLike, Vec

Evaluator = Callable[[str, str], Vec]


@dataclass(frozen=True)
class ModuleExtension:
    """(C𝔤 ⋉_ω V)_(δ) together with the (ω, δ) that built it."""

    g: LieAlgebra
    module: GDiffSpace
    datum: ExtensionDatum
    dgla: Dgla

    @classmethod
    def build(
        cls, g: LieAlgebra, module: GDiffSpace, datum: ExtensionDatum, name: Optional[str] = None
    ) -> "ModuleExtension":
        return cls(g, module, datum, semidirect(g, module, datum, name))

    @classmethod
    def fms(cls, g: LieAlgebra, p3: Form) -> "ModuleExtension":
        b, _ = fms_tower(g, p3)
        return cls(g, dual_cone_module(g).shift(2), ExtensionDatum(fms_omega(g, p3), {}), b)

    @classmethod
    def e_deformation(
        cls, g: LieAlgebra, v: GDiffSpace, e: Mapping[str, ScalarLike], name: Optional[str] = None
    ) -> "ModuleExtension":
        datum = e_datum(g, v, e)
        return cls(g, v, datum, semidirect(g, v, datum, name or f"C_e({g.name},{v.name})"))

    @classmethod
    def sigma(
        cls, v: GDiffSpace, h: Mapping[str, ScalarLike], k: int, name: Optional[str] = None
    ) -> "ModuleExtension":
        shifted = v.shift(k + 1)
        return cls(v.g, shifted, e_datum(v.g, shifted, h), sigma_dgla(v, h, k, name))

    def degree(self, label: str) -> int:
        return self.dgla.degree(label)

    def omega(self, a: str, b: str) -> Vec:
        """ω(a, b) for any order, by graded antisymmetry from the stored one."""
        if (a, b) in self.datum.omega:
            return Vec(self.datum.omega[(a, b)])
        if (b, a) in self.datum.omega:
            return Vec(self.datum.omega[(b, a)]) * -koszul_sign(self.degree(a), self.degree(b))
        return Vec()

    def delta(self, a: str) -> Vec:
        return Vec(self.datum.delta.get(a, {}))

    def act(self, a: str, w: str) -> Vec:
        return action(self.module, a, Vec.basis(w))


def _cone_lift(s: Cdga, kind: str, u: str, differentiate: bool = False) -> Vec:
    """φ⊗x ↦ φ⊗K(x), or dφ⊗K(x) with ``differentiate``."""
    phi, x = split_label(u)
    make = I if kind == "I" else L
    if differentiate:
        return tensor_vector(s.d(Vec.basis(phi)), {make(x): Fraction(1)})
    return pure(phi, make(x))


def sigma_gamma(s: Cdga, gamma: Form) -> Evaluator:
    """σ_γ(φ⊗x, ψ⊗y) = φψ γ(x, y)⊗c1."""

    def evaluate(u: str, v: str) -> Vec:
        (phi, x), (psi, y) = split_label(u), split_label(v)
        return tensor_vector(s.product_basis(phi, psi), {C1: gamma(x, y)})

    return evaluate


def sigma_p(s: Cdga, p: Form) -> Evaluator:
    """σ_p(u, v) = p(du, v)⊗c2 = p(x, y) dφ·ψ⊗c2, a class in A¹/dA⁰."""

    def evaluate(u: str, v: str) -> Vec:
        (phi, x), (psi, y) = split_label(u), split_label(v)
        value = s.multiply(s.d(Vec.basis(phi)), Vec.basis(psi))
        return tensor_vector(value, {C2: p(x, y)})

    return evaluate


def sigma_N(s: Cdga, datum: AlphaDatum) -> Evaluator:
    """σ_N(u, v) = p(u, dv) − p(du, v) + d(ω(u, v)), a 1-form of the model."""

    def evaluate(u: str, v: str) -> Vec:
        (phi, x), (psi, y) = split_label(u), split_label(v)
        e_phi, e_psi = Vec.basis(phi), Vec.basis(psi)
        skew = s.multiply(e_phi, s.d(e_psi)) - s.multiply(e_psi, s.d(e_phi))
        result = skew * datum.p(x, y)
        return result.add_scaled(s.d(s.product_basis(phi, psi)), datum.omega(x, y))

    return evaluate


def sigma_alpha_sa(s: Cdga, datum: AlphaDatum) -> Evaluator:
    """σ_N⊗c1 − dσ_N⊗c2: the closed element of S¹⊗c1 ⊕ S²⊗c2 over σ_N."""
    n = sigma_N(s, datum)

    def evaluate(u: str, v: str) -> Vec:
        value = n(u, v)
        closed = tensor_vector(value, {C1: Fraction(1)})
        return closed - tensor_vector(s.d(value), {C2: Fraction(1)})

    return evaluate


def sigma_omega_delta(s: Cdga, ext: ModuleExtension) -> Evaluator:
    """
    ½(I(u)·δI(v) − I(v)·δI(u) + ω(I(du),I(v)) − ω(I(dv),I(u))
      + ω(I(u),L(v)) − ω(I(v),L(u)))

    with every term extended S-linearly.
    """

    def delta_of(u: str) -> Vec:
        phi, x = split_label(u)
        return tensor_vector({phi: Fraction(parity_sign(s.degree(phi)))}, ext.delta(I(x)))

    def evaluate(u: str, v: str) -> Vec:
        iu, iv = _cone_lift(s, "I", u), _cone_lift(s, "I", v)
        idu, idv = _cone_lift(s, "I", u, True), _cone_lift(s, "I", v, True)
        lu, lv = _cone_lift(s, "L", u), _cone_lift(s, "L", v)
        result = tensor_bilinear(s, ext.degree, ext.act, iu, delta_of(v))
        result -= tensor_bilinear(s, ext.degree, ext.act, iv, delta_of(u))
        result += tensor_bilinear(s, ext.degree, ext.omega, idu, iv)
        result -= tensor_bilinear(s, ext.degree, ext.omega, idv, iu)
        result += tensor_bilinear(s, ext.degree, ext.omega, iu, lv)
        result -= tensor_bilinear(s, ext.degree, ext.omega, iv, lu)
        return result * Fraction(1, 2)

    return evaluate


def _contract_twice(
    s: Cdga, ext: ModuleExtension, first: str, second: str, e: Mapping[str, ScalarLike]
) -> Vec:
    """I(second)·(I(first)·(1⊗e))."""
    unit_e = tensor_vector({s.unit: Fraction(1)}, Vec(e))
    inner = tensor_bilinear(s, ext.degree, ext.act, _cone_lift(s, "I", first), unit_e)
    return tensor_bilinear(s, ext.degree, ext.act, _cone_lift(s, "I", second), inner)


def sigma_e_ca(s: Cdga, ext: ModuleExtension, e: Mapping[str, ScalarLike]) -> Evaluator:
    """(u, v) ↦ −I(u)I(v)e."""
    return lambda u, v: -_contract_twice(s, ext, v, u, e)


def sigma_H(s: Cdga, ext: ModuleExtension, h: Mapping[str, ScalarLike]) -> Evaluator:
    """σ_H(u, v) = i_v i_u H."""
    return lambda u, v: _contract_twice(s, ext, u, v, h)


def on_sa(total: Dgla, evaluator: Evaluator) -> Evaluator:
    """The SA cocycle d∘σ of a CA cocycle σ."""
    return lambda u, v: total.d(evaluator(u, v))


def sigma_e_sa(
    s: Cdga, ext: ModuleExtension, e: Mapping[str, ScalarLike], total: Dgla
) -> Evaluator:
    """(u, v) ↦ −dI(u)I(v)e on Ω(S)⊗V."""
    return on_sa(total, sigma_e_ca(s, ext, e))


def fms_pairing(s: Cdga, f: str, gamma: str) -> Vec:
    """(dγ, f)⊗c4 for f = φ⊗I(x) and γ = η⊗ι(ξ): ξ(x) dη·φ."""
    phi, part = split_label(f)
    eta, module_part = split_label(gamma)
    x, xi = cone_parts(part)[1], cone_parts(module_part)[1]
    if xi != dual_label(x):
        return Vec()
    return tensor_vector(s.multiply(s.d(Vec.basis(eta)), Vec.basis(phi)), {C4: Fraction(1)})


def fms_central(s: Cdga) -> Evaluator:
    """Central cocycle of CA(S, B_FMS) over CA(S, B): −(dγ, f) on (f, γ), zero elsewhere."""

    def evaluate(a: str, b: str) -> Vec:
        kinds = (cone_parts(split_label(a)[1])[0], cone_parts(split_label(b)[1])[0])
        if kinds == ("I", "i"):
            return -fms_pairing(s, a, b)
        if kinds == ("i", "I"):
            return fms_pairing(s, b, a)
        return Vec()

    return evaluate


def normalized(
    algebra: CurrentAlgebra, splitting: ExtensionSplitting, sigma: Cocycle2, evaluator: Evaluator
) -> Cocycle2:
    """Evaluator values on the base of ``sigma``, in its fiber coordinates."""
    return Cocycle2.from_function(
        sigma.base, sigma.module, lambda u, v: normalize(algebra, splitting, evaluator(u, v))
    )


def _current_of(label: str) -> tuple[str, str]:
    phi, part = split_label(label)
    return phi, cone_parts(part)[1]


def verify_prin_brackets(
    algebra: CurrentAlgebra, ext: ModuleExtension, h: Mapping[str, ScalarLike]
) -> Certificate:
    """
    The bracket table of CA(S, sigma dgla) in generators:

        [φ⊗I(x), ψ⊗I(y)] = φψ⊗I([x,y]) + σ_H(φ⊗x, ψ⊗y)
        [φ⊗I(x), η⊗α]    = φη⊗L(x)α + (−1)^{|η|} dφ·η⊗I(x)α
        [η⊗α, η'⊗α']     = 0
        d(η⊗β)            = 0 in the quotient
    """
    s, g, module = algebra.model, ext.g, ext.module
    currents = [l for l in algebra.labels if split_label(l)[1][:2] == "I("]
    fibers = [l for l in algebra.labels if l not in currents]
    sigma = sigma_H(s, ext, h)
    cert = Certificate(f"bracket table of {algebra.name}")

    witness = None
    for a, b in product(currents, repeat=2):
        (phi, x), (psi, y) = _current_of(a), _current_of(b)
        expected = tensor_vector(s.product_basis(phi, psi), wrap("I", g.bracket_basis(x, y)))
        expected += sigma(tensor_label(phi, x), tensor_label(psi, y))
        if algebra.bracket(Vec.basis(a), Vec.basis(b)) != algebra.project(expected):
            witness = f"[{a}, {b}]"
            break
    cert.add("current_bracket", witness, len(currents) ** 2)

    witness = None
    for a, m in product(currents, fibers):
        phi, x = _current_of(a)
        eta, alpha = split_label(m)
        e_alpha = Vec.basis(alpha)
        expected = tensor_vector(s.product_basis(phi, eta), module.lie[x](e_alpha))
        dphi_eta = s.multiply(s.d(Vec.basis(phi)), Vec.basis(eta))
        expected = expected.add_scaled(
            tensor_vector(dphi_eta, module.contraction[x](e_alpha)), parity_sign(s.degree(eta))
        )
        if algebra.bracket(Vec.basis(a), Vec.basis(m)) != algebra.project(expected):
            witness = f"[{a}, {m}]"
            break
    cert.add("module_action", witness, len(currents) * len(fibers))

    witness = None
    for m, n in product(fibers, repeat=2):
        if algebra.bracket(Vec.basis(m), Vec.basis(n)):
            witness = f"[{m}, {n}]"
            break
    cert.add("module_abelian", witness, len(fibers) ** 2)

    # dη⊗β + (−1)^{|η|} η⊗dβ, expanded factor by factor
    witness = None
    lower = algebra.total.space.in_degree(-2)
    for label in lower:
        eta, beta = split_label(label)
        expanded = tensor_vector(s.d(Vec.basis(eta)), Vec.basis(beta)).add_scaled(
            tensor_vector(Vec.basis(eta), algebra.source.d(Vec.basis(beta))),
            parity_sign(s.degree(eta)),
        )
        if algebra.project(expanded):
            witness = f"d({label})"
            break
    cert.add("exact_relation", witness, len(lower))
    return cert
