"""
Extension cases: a dgla built from cocycle data, paired with the
closed-form cocycles its current algebras should carry.

``run_case`` computes CA or SA, extracts the characteristic cocycle over
the canonical splitting, validates it and compares it with every formula
of the case after the same normalization.
"""

from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Optional

from src.cocycles.compare import CocycleComparison, CompareMode, compare_cocycles
from src.cocycles.evaluators import (
    Evaluator,
    ModuleExtension,
    fms_central,
    normalized,
    on_sa,
    sigma_alpha_sa,
    sigma_e_ca,
    sigma_e_sa,
    sigma_gamma,
    sigma_H,
    sigma_omega_delta,
    sigma_p,
)
from src.cocycles.extract import (
    Cocycle2,
    ExtensionSplitting,
    current_extension_cocycle,
    extract_cocycle,
    validate_cocycle,
)
from src.constructions import fixtures
from src.constructions.extensions import (
    CocycleKind,
    CocycleSpec,
    central_extension_cone,
    cone_alpha_extension,
    decompose_alpha,
)
from src.constructions.semidirect import C4, ExtensionDatum, fms_tower
from src.dgla.cdga import Cdga
from src.dgla.certificate import Certificate
from src.dgla.dgla import Dgla
from src.dgla.errors import ConstructionRejected
from src.dgla.gdiff import GDiffSpace
from src.dgla.lie import Form, LieAlgebra
from src.dgla.tensor import split_label
from src.functors.current import CurrentAlgebra, Functor, ca, sa
from src.linalg.vector import ScalarLike

# (model, Ω(S)⊗A) -> evaluator on pairs of current labels
Formula = Callable[[Cdga, Dgla], Evaluator]


@dataclass(frozen=True)
class ExtensionCase:
    """
    ``central_over`` marks a central extension of a module extension
    (B_FMS over B): its cocycle lives on CA(S, central_over) instead of
    on the current algebra.
    """

    name: str
    g: LieAlgebra
    dgla: Dgla
    ca_formulas: dict = field(default_factory=dict)
    sa_formulas: dict = field(default_factory=dict)
    central_over: Optional[Dgla] = None
    extension: Optional[ModuleExtension] = None

    def formulas(self, functor: Functor) -> dict[str, Formula]:
        return self.ca_formulas if functor is Functor.CA else self.sa_formulas

    def supports(self, functor: Functor) -> bool:
        return functor is Functor.CA or self.central_over is None


def _lift_to_sa(formula: Formula) -> Formula:
    return lambda s, total: on_sa(total, formula(s, total))


def _pair(name: str, formula: Formula) -> tuple[dict, dict]:
    return {name: formula}, {name: _lift_to_sa(formula)}


def gamma_case(g: LieAlgebra, gamma: Form, name: str = "") -> ExtensionCase:
    dgla = central_extension_cone(g, CocycleSpec(CocycleKind.LAMBDA, gamma))
    ca_f, sa_f = _pair("sigma_gamma", lambda s, _: sigma_gamma(s, gamma))
    return ExtensionCase(name or dgla.name, g, dgla, ca_f, sa_f)


def p_case(g: LieAlgebra, p: Form, name: str = "") -> ExtensionCase:
    dgla = central_extension_cone(g, CocycleSpec(CocycleKind.P, p))
    ca_f, sa_f = _pair("sigma_p", lambda s, _: sigma_p(s, p))
    return ExtensionCase(name or dgla.name, g, dgla, ca_f, sa_f)


def alpha_case(g: LieAlgebra, alpha: Form, name: str = "") -> ExtensionCase:
    """C_α𝔤: only the SA cocycle has a closed form."""
    datum = decompose_alpha(g, alpha)
    dgla = cone_alpha_extension(datum)
    sa_f = {"sigma_N": lambda s, _: sigma_alpha_sa(s, datum)}
    return ExtensionCase(name or dgla.name, g, dgla, {}, sa_f)


def module_case(
    g: LieAlgebra, v: GDiffSpace, datum: ExtensionDatum, name: str = ""
) -> ExtensionCase:
    ext = ModuleExtension.build(g, v, datum, name or None)
    ca_f, sa_f = _pair("omega_delta", lambda s, _: sigma_omega_delta(s, ext))
    return ExtensionCase(ext.dgla.name, g, ext.dgla, ca_f, sa_f, extension=ext)


def fms_case(g: LieAlgebra, p3: Form, name: str = "") -> ExtensionCase:
    ext = ModuleExtension.fms(g, p3)
    ca_f, sa_f = _pair("omega_delta", lambda s, _: sigma_omega_delta(s, ext))
    return ExtensionCase(name or ext.dgla.name, g, ext.dgla, ca_f, sa_f, extension=ext)


def fms_central_case(g: LieAlgebra, p3: Form, name: str = "") -> ExtensionCase:
    b, b_fms = fms_tower(g, p3)
    formulas = {"pairing": lambda s, _: fms_central(s)}
    return ExtensionCase(name or b_fms.name, g, b_fms, formulas, {}, central_over=b)


def e_case(
    g: LieAlgebra, v: GDiffSpace, e: Mapping[str, ScalarLike], name: str = ""
) -> ExtensionCase:
    ext = ModuleExtension.e_deformation(g, v, e, name or None)
    ca_f = {
        "sigma_e": lambda s, _: sigma_e_ca(s, ext, e),
        "omega_delta": lambda s, _: sigma_omega_delta(s, ext),
    }
    sa_f = {"sigma_e": lambda s, total: sigma_e_sa(s, ext, e, total)}
    return ExtensionCase(ext.dgla.name, g, ext.dgla, ca_f, sa_f, extension=ext)


def sigma_case(
    v: GDiffSpace, h: Mapping[str, ScalarLike], k: int, name: str = ""
) -> ExtensionCase:
    ext = ModuleExtension.sigma(v, h, k, name or None)
    ca_f = {
        "sigma_H": lambda s, _: sigma_H(s, ext, h),
        "omega_delta": lambda s, _: sigma_omega_delta(s, ext),
    }
    sa_f = {"sigma_H": _lift_to_sa(lambda s, _: sigma_H(s, ext, h))}
    return ExtensionCase(ext.dgla.name, v.g, ext.dgla, ca_f, sa_f, extension=ext)


def fixture_case(name: str) -> ExtensionCase:
    """Case for Cgamma(g), Cp(g), Calpha(g), B(g), Bfms(g), Ce(sigma) or sigma(T3)."""
    if name == "Ce(sigma)":
        return e_case(
            fixtures.lie("ab3"), fixtures.sigma_module().shift(1), fixtures.CE_ELEMENT, name
        )
    if name == "sigma(T3)":
        return sigma_case(fixtures.sigma_module(), fixtures.SIGMA_H, fixtures.SIGMA_K, name)
    match = fixtures.EXPRESSION.match(name)
    if not match:
        raise KeyError(f"unknown extension {name!r}")
    kind, g = match.group(1), fixtures.lie(match.group(2))
    if kind == "Cgamma":
        return gamma_case(g, fixtures.default_gamma(g), name)
    if kind == "Cp":
        return p_case(g, fixtures.default_p(g), name)
    if kind == "Calpha":
        return alpha_case(g, fixtures.default_alpha(g), name)
    if kind == "B":
        return fms_case(g, fixtures.default_p3(g), name)
    if kind == "Bfms":
        return fms_central_case(g, fixtures.default_p3(g), name)
    raise KeyError(f"{name!r} is not an extension")


@dataclass
class CaseResult:
    """Extracted cocycle, its validity and its agreement with each formula."""

    case: str
    functor: Functor
    model: str
    algebra: CurrentAlgebra = field(repr=False)
    extracted: Cocycle2 = field(repr=False)
    certificate: Certificate
    comparisons: dict[str, CocycleComparison] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.certificate.passed

    def to_json(self) -> dict[str, Any]:
        return {
            "case": self.case,
            "functor": self.functor.value,
            "model": self.model,
            "base_dim": self.extracted.base.dim,
            "fiber_dim": len(self.extracted.module.labels),
            "cocycle": self.extracted.to_json(),
            "comparisons": {k: v.to_json() for k, v in sorted(self.comparisons.items())},
        }


def _central_splitting(algebra: CurrentAlgebra) -> ExtensionSplitting:
    fiber = [l for l in algebra.labels if split_label(l)[1] == C4]
    base = [l for l in algebra.labels if l not in fiber]
    return ExtensionSplitting.from_labels(algebra.labels, base, fiber)


def run_case(
    case: ExtensionCase,
    functor: Functor,
    s: Cdga,
    mode: CompareMode = CompareMode.EXACT,
    compare: bool = True,
) -> CaseResult:
    """
    Extract the cocycle of ``functor``(s, case.dgla) and, with ``compare``,
    check it against the closed forms of the case.
    """
    if not case.supports(functor):
        raise ConstructionRejected(f"{case.name} has no {functor.value} cocycle", case.name)
    algebra = ca(s, case.dgla) if functor is Functor.CA else sa(s, case.dgla)
    if case.central_over is not None:
        splitting = _central_splitting(algebra)
        base_name = f"CA({s.name},{case.central_over.name})"
        sigma = extract_cocycle(algebra.as_lie(), splitting, base_name)
    else:
        sigma, splitting = current_extension_cocycle(algebra, case.g)

    cert = validate_cocycle(sigma)
    cert.subject = f"{functor.value}({s.name}, {case.name}) cocycle"
    comparisons: dict[str, CocycleComparison] = {}
    if compare:
        formulas = case.formulas(functor)
        if not formulas:
            raise ConstructionRejected(
                f"no closed-form {functor.value} cocycle for {case.name}", case.name
            )
        for label, formula in formulas.items():
            expected = normalized(algebra, splitting, sigma, formula(s, algebra.total))
            comparison = compare_cocycles(sigma, expected, mode)
            comparisons[label] = comparison
            cert.add(f"matches_{label}", comparison.witness, sigma.base.dim**2)
    return CaseResult(case.name, functor, s.name, algebra, sigma, cert, comparisons)
