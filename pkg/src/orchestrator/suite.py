"""
Acceptance run over the shipped catalogue (``dgla-cert certify --all``).

Every phase goes straight to the fixtures, so definitions loaded from a
task file never shadow the catalogue names checked here.
"""

from itertools import product
from typing import TYPE_CHECKING, Callable

from src.cocycles.cases import fixture_case, run_case
from src.cocycles.chevalley import Representation, ce_cohomology, form_in_span, invariant_forms
from src.cocycles.compare import CompareMode, compare_cocycles
from src.cocycles.evaluators import verify_prin_brackets
from src.cocycles.extract import Cocycle2
from src.constructions import fixtures
from src.constructions.cone import cone
from src.constructions.extensions import CocycleKind, CocycleSpec, central_extension_cone
from src.constructions.semidirect import fms_tower
from src.dgla.cdga import Cdga
from src.dgla.certificate import Certificate
from src.dgla.dgla import central_extension
from src.dgla.errors import ConstructionRejected, NonAcyclicQuotient
from src.dgla.morphisms import CdgaMorphism, DglaMorphism
from src.dgla.lie import Form, LieAlgebra, trace_form
from src.functors.current import Functor, ca, sa
from src.functors.maps import current_iso, verify_functoriality
from src.functors.sequence import central_extension_ses, four_term_sequence, ses_image
from src.orchestrator.export import export
from src.orchestrator.report import TaskRecord

if TYPE_CHECKING:
    from src.orchestrator.main import CertificationOrchestrator

SEQUENCES = [
    ("Circ", "cone(sl2)"),
    ("Intv", "Cp(sl2)"),
    ("Circ", "R[1]"),
    ("T2", "R[1]"),
    ("CircIntv", "Calpha(ab2)"),
    ("Sq", "Cp(sl2)"),
    ("Circ", "sigma(T3)"),
]

# (functor, model, extension)
COMPARISONS = [
    (Functor.CA, "Intv", "Cgamma(ab2)"),
    (Functor.SA, "Intv", "Cgamma(ab2)"),
    (Functor.CA, "CircIntv", "Cgamma(heis3)"),
    (Functor.CA, "Sq", "Cp(sl2)"),
    (Functor.SA, "Sq", "Cp(sl2)"),
    (Functor.CA, "CircIntv", "Cp(sl2)"),
    (Functor.SA, "Intv", "Calpha(ab2)"),
    (Functor.SA, "CircIntv", "Calpha(ab2)"),
    (Functor.SA, "Sq", "Calpha(ab2)"),
    (Functor.SA, "Intv", "Calpha(sl2)"),
    (Functor.CA, "Circ", "Ce(sigma)"),
    (Functor.SA, "Circ", "Ce(sigma)"),
    (Functor.CA, "FmsS", "B(gl2)"),
    (Functor.CA, "FmsS", "Bfms(gl2)"),
    (Functor.CA, "Circ", "sigma(T3)"),
]

# Lie algebra -> dim H²(g; ℝ)
H2_TRIVIAL = {"ab2": 1, "sl2": 0, "heis3": 2}
# Lie algebra -> dim H¹(g; g*)
H1_COADJOINT = {"sl2": 0, "ab2": 4}
# (Lie algebra, degree) -> number of invariant symmetric forms
INVARIANT_FORMS = {("sl2", 2): 1, ("sl2", 3): 0, ("sl3", 3): 1}


def _dgla(name: str):
    if name == "R[1]":
        return fixtures.line("u", -1)
    return fixtures.dgla(name)


def functoriality_chains() -> list[tuple[str, tuple, tuple]]:
    """Composable (CDGA morphism, dgla morphism) pairs, as (name, inner, outer)."""
    circ, pt = fixtures.cdga("Circ"), fixtures.cdga("Pt")
    evaluate = CdgaMorphism.from_images(circ, pt, {"1": {"1": 1}})
    unit = CdgaMorphism.from_images(pt, circ, {"1": {"1": 1}})
    on_circ = CdgaMorphism.identity(circ)
    ses = central_extension_ses(fixtures.dgla("Cp(sl2)"), fixtures.dgla("cone(sl2)"))
    return [
        (
            "Circ → Pt → Circ with Cp(sl2) → cone(sl2)",
            (evaluate, DglaMorphism.identity(ses.p.source)),
            (unit, ses.p),
        ),
        ("center → Cp(sl2) → cone(sl2) over Circ", (on_circ, ses.i), (on_circ, ses.p)),
    ]


def _verdict(subject: str, name: str, witness, checked: int = 1) -> Certificate:
    cert = Certificate(subject)
    cert.add(name, witness, checked)
    return cert


class AcceptanceSuite:
    """Runs the catalogue checks through an orchestrator's console and config."""

    def __init__(self, orchestrator: "CertificationOrchestrator"):
        self.orchestrator = orchestrator
        self.records: list[TaskRecord] = []

    def phase(self, title: str) -> None:
        self.orchestrator.say(f"\n[bold]{title}[/bold]")

    def add(self, task: str, cert: Certificate, inputs: dict, result: dict | None = None) -> None:
        record = TaskRecord(task, cert.subject, inputs, result or {}, cert)
        self.records.append(self.orchestrator.record(record))

    def run(self) -> list[TaskRecord]:
        self.validators()
        self.perturbations()
        self.identifications()
        self.sequences()
        self.short_exact_sequences()
        self.functoriality()
        self.cocycles()
        self.bracket_tables()
        self.determinism()
        self.lie_cohomology()
        self.rejections()
        return self.records

    # Phases

    def validators(self) -> None:
        self.phase("Phase 1: Validating catalogue structures")
        validate = self.orchestrator.validate_object
        for name in fixtures.LIE_FIXTURES:
            self.records.append(self.orchestrator.record(validate(fixtures.lie(name), name)))
            cone_name = f"cone({name})"
            cone_record = validate(fixtures.dgla(cone_name), cone_name)
            self.records.append(self.orchestrator.record(cone_record))
        for name in fixtures.CDGA_FIXTURES:
            self.records.append(self.orchestrator.record(validate(fixtures.cdga(name), name)))
        for name in ["T3"] + [f"dualcone({g})" for g in fixtures.LIE_FIXTURES]:
            self.records.append(self.orchestrator.record(validate(fixtures.gdiff(name), name)))
        cert = Certificate("cone(sl2) has dimension 6")
        dim = cone(fixtures.lie("sl2")).dim
        cert.add("dimension", None if dim == 6 else f"dim {dim}", 1)
        self.add("validate", cert, {"target": "cone(sl2)"}, {"dim": dim})

    def perturbations(self) -> None:
        """Every broken structure must be caught with a witness."""
        self.phase("Phase 2: Broken structures are rejected")
        validate = self.orchestrator.validate_object
        intv = fixtures.cdga("Intv")
        broken_cdga = Cdga.build("Intv~", intv.space, {("ε", "ε"): {"ε": 1}}, {"ε": {"η": 1}})
        heis = fixtures.lie("heis3")
        broken_lie = LieAlgebra.from_brackets(
            "heis3~", heis.basis, {("x", "y"): {"z": 1}, ("y", "z"): {"y": 1}}
        )
        broken = [
            ("cone(sl2)~", fixtures.perturbed_cone()),
            ("T3~", fixtures.perturbed_sigma_module()),
            ("Intv~", broken_cdga),
            ("heis3~", broken_lie),
        ]
        for name, obj in broken:
            outcome = validate(obj, name).certificate
            witness = outcome.failures[0].witness if outcome.failures else None
            cert = Certificate(f"{name} is rejected")
            problem = None if witness else "validator accepted a broken structure"
            cert.add("rejected_with_witness", problem, 1)
            self.add("validate", cert, {"target": name}, {"witness": witness})

    def identifications(self) -> None:
        self.phase("Phase 3: Current algebra identifications")
        for model, g in product(fixtures.CDGA_FIXTURES, fixtures.LIE_FIXTURES):
            iso = current_iso(fixtures.cdga(model), fixtures.lie(g))
            result = {"dim": iso.current.dim}
            self.add("current_iso", iso.certificate, {"model": model, "lie": g}, result)

    def sequences(self) -> None:
        self.phase("Phase 4: Four-term exact sequences")
        for model, name in SEQUENCES:
            exactness = four_term_sequence(fixtures.cdga(model), _dgla(name))
            result = {"dims": exactness.dims, "ranks": exactness.ranks}
            self.add("sequence", exactness.certificate, {"model": model, "dgla": name}, result)

    def short_exact_sequences(self) -> None:
        self.phase("Phase 5: Short exact sequences")
        ses = central_extension_ses(fixtures.dgla("Cp(sl2)"), fixtures.dgla("cone(sl2)"))
        for model in ("Circ", "Intv"):
            for functor, cert in ses_image(ses, fixtures.cdga(model)).items():
                self.add("ses", cert, {"model": model, "functor": functor, "ses": ses.name})

        base = fixtures.line("u", -1)
        extension = central_extension(base, "R[1]+R[2]", [("c", -2)], {})
        bad = central_extension_ses(extension, base)
        cert = Certificate("non-acyclic quotient is refused")
        witness = "ses_image accepted a non-acyclic quotient"
        try:
            ses_image(bad, fixtures.cdga("Circ"))
        except NonAcyclicQuotient as e:
            witness = None if e.witness else "no cohomology class reported"
        cert.add("non_acyclic_quotient", witness, 1)
        self.add("ses", cert, {"model": "Circ", "ses": bad.name})

    def functoriality(self) -> None:
        self.phase("Phase 6: Functoriality of induced maps")
        for (name, inner, outer), functor in product(functoriality_chains(), Functor):
            cert = verify_functoriality(functor, inner, outer)
            self.add("functoriality", cert, {"functor": functor.value, "chain": name})

    def cocycles(self) -> None:
        self.phase("Phase 7: Extracted cocycles against closed forms")
        for name in ("B(gl2)", "Bfms(gl2)"):
            dgla = fixtures.dgla(name)
            self.records.append(
                self.orchestrator.record(self.orchestrator.validate_object(dgla, name))
            )
        for functor, model, extension in COMPARISONS:
            case = fixture_case(extension)
            outcome = run_case(case, functor, fixtures.cdga(model))
            inputs = {"functor": functor.value, "model": model, "extension": extension}
            self.add("compare", outcome.certificate, inputs, outcome.to_json())

        # The truncated square carries a class no coboundary removes.
        sq = fixtures.cdga("Sq")
        outcome = run_case(fixture_case("Cp(sl2)"), Functor.CA, sq, compare=False)
        sigma = outcome.extracted
        zero = Cocycle2(sigma.base, sigma.module, {})
        verdict = compare_cocycles(sigma, zero, CompareMode.COHOMOLOGOUS)
        witness = "cocycle is a coboundary" if verdict.equal else None
        cert = _verdict("CA(Sq, Cp(sl2)) cocycle is nontrivial", "nontrivial_class", witness)
        self.add("compare", cert, {"functor": "CA", "model": "Sq", "extension": "Cp(sl2)"})

        # Cgamma over a point: exactly one pair (1⊗x, 1⊗y) is nonzero.
        outcome = run_case(fixture_case("Cgamma(ab2)"), Functor.CA, fixtures.cdga("Pt"))
        pairs = outcome.extracted.nonzero_pairs()
        witness = None if len(pairs) == 1 else f"{len(pairs)} nonzero pairs"
        cert = _verdict("CA(Pt, Cgamma(ab2)) cocycle", "single_pair", witness)
        self.add("extract", cert, {"functor": "CA", "model": "Pt", "extension": "Cgamma(ab2)"})

    def bracket_tables(self) -> None:
        self.phase("Phase 8: Bracket table of the sigma-model current algebra")
        case = fixture_case("sigma(T3)")
        algebra = ca(fixtures.cdga("Circ"), case.dgla)
        cert = verify_prin_brackets(algebra, case.extension, fixtures.SIGMA_H)
        self.add("brackets", cert, {"model": "Circ", "dgla": "sigma(T3)"}, {"dim": algebra.dim})

    def determinism(self) -> None:
        self.phase("Phase 9: Deterministic export")
        builders: list[tuple[str, Callable]] = [
            ("cone(sl2)", lambda: cone(fixtures.lie("sl2"))),
            ("CA(Circ, cone(sl2))", lambda: ca(fixtures.cdga("Circ"), cone(fixtures.lie("sl2")))),
            ("SA(Intv, Cp(sl2))", lambda: sa(fixtures.cdga("Intv"), fixtures.dgla("Cp(sl2)"))),
        ]
        for name, build in builders:
            first, second = export(build()), export(build())
            witness = None if first == second else "exports differ"
            cert = _verdict(f"export of {name} is byte-identical", "deterministic", witness, 2)
            self.add("build", cert, {"target": name})

    def lie_cohomology(self) -> None:
        self.phase("Phase 10: Chevalley–Eilenberg cohomology")
        for name, expected in H2_TRIVIAL.items():
            g = fixtures.lie(name)
            report = ce_cohomology(g, Representation.trivial(g), 2)
            self._expect_dim(f"H^2({name}; R)", report.dimension, expected)
        for name, expected in H1_COADJOINT.items():
            g = fixtures.lie(name)
            report = ce_cohomology(g, Representation.coadjoint(g), 1)
            self._expect_dim(f"H^1({name}; {name}*)", report.dimension, expected)
        for (name, degree), expected in INVARIANT_FORMS.items():
            forms = invariant_forms(fixtures.lie(name), degree)
            self._expect_dim(f"invariant S^{degree}({name}*)", len(forms), expected)

        gl2 = fixtures.lie("gl2")
        found = form_in_span(invariant_forms(gl2, 3), trace_form(gl2, 3))
        witness = None if found else "trace form not in the invariant span"
        cert = _verdict("tr(xyz) is an invariant form on gl2", "in_span", witness)
        self.add("cohomology", cert, {"target": "gl2", "degree": 3})

    def rejections(self) -> None:
        self.phase("Phase 11: Invalid cocycle data is refused")
        ab2, sl2, gl2 = (fixtures.lie(name) for name in ("ab2", "sl2", "gl2"))
        rho = CocycleSpec(CocycleKind.RHO, Form.skew({("x", "y"): 1}))
        p = CocycleSpec(CocycleKind.P, fixtures.non_invariant_p(sl2))
        p3 = Form.symmetric(3, {("e11", "e11", "e12"): 1})
        attempts: list[tuple[str, Callable]] = [
            ("degree-0 extension with rho != 0", lambda: central_extension_cone(ab2, rho)),
            ("non-invariant p", lambda: central_extension_cone(sl2, p)),
            ("non-invariant p3", lambda: fms_tower(gl2, p3)),
        ]
        for name, attempt in attempts:
            witness = f"{name} was accepted"
            try:
                attempt()
            except ConstructionRejected as e:
                witness = None if e.witness else "rejection carries no witness"
            cert = _verdict(f"{name} is rejected", "rejected_with_witness", witness)
            self.add("build", cert, {"target": name})

    def _expect_dim(self, subject: str, found: int, expected: int) -> None:
        witness = None if found == expected else f"dimension {found}, expected {expected}"
        cert = _verdict(f"{subject} has dimension {expected}", "dimension", witness)
        self.add("cohomology", cert, {"target": subject}, {"dimension": found})
