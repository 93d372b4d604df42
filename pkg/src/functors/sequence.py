"""
The four-term exact sequence

    0 → H^{-1}(Ω(S)⊗A) → CA(S,A) → SA(S,A) → H^0(Ω(S)⊗A) → 0

and the images of short exact sequences of dglas under CA and SA.
"""

from dataclasses import dataclass, field
from typing import Any, Mapping

from src.dgla.cdga import Cdga
from src.dgla.certificate import Certificate
from src.dgla.cohomology import cohomology, is_acyclic
from src.dgla.dgla import Dgla
from src.dgla.errors import ConstructionRejected, NonAcyclicQuotient
from src.dgla.morphisms import CdgaMorphism, DglaMorphism, validate_dgla_morphism
from src.functors.current import Functor, ca, sa
from src.functors.maps import apply_linear, images_rank, induced_map, verify_lie_morphism
from src.linalg.graded import GradedMap, GradedSpace
from src.linalg.vector import Vec


def _class_label(degree: int, i: int) -> str:
    return f"H{degree}[{i}]"


@dataclass
class ExactnessCertificate:
    """Maps of the four-term sequence with their dimension table."""

    subject: str
    dims: dict[str, int]
    ranks: dict[str, int]
    maps: dict[str, dict] = field(repr=False)
    certificate: Certificate = field(repr=False)

    @property
    def passed(self) -> bool:
        return self.certificate.passed

    def to_json(self) -> dict[str, Any]:
        return {
            "subject": self.subject,
            "dims": self.dims,
            "ranks": self.ranks,
            "certificate": self.certificate.to_json(),
        }


def four_term_sequence(s: Cdga, a: Dgla) -> ExactnessCertificate:
    """
    Materialize inclusion, d and projection, and check exactness at every
    node by rank bookkeeping.
    """
    ca_alg, sa_alg = ca(s, a), sa(s, a)
    total = ca_alg.total
    h_minus = cohomology(total.space, total.differential, -1)
    h_zero = cohomology(total.space, total.differential, 0)
    h_minus_labels = [_class_label(-1, i) for i in range(h_minus.dimension)]
    h_zero_labels = [_class_label(0, i) for i in range(h_zero.dimension)]

    inclusion = {
        label: ca_alg.project(rep) for label, rep in zip(h_minus_labels, h_minus.representatives)
    }
    d_map = {
        label: sa_alg.project(total.d(ca_alg.lift(Vec.basis(label)))) for label in ca_alg.labels
    }
    projection = {}
    for label in sa_alg.labels:
        coords = h_zero.coordinates(sa_alg.lift(Vec.basis(label)))
        projection[label] = Vec(zip(h_zero_labels, coords or []))

    ranks = {
        "inclusion": images_rank(list(inclusion.values()), ca_alg.labels),
        "d": images_rank(list(d_map.values()), sa_alg.labels),
        "projection": images_rank(list(projection.values()), h_zero_labels),
    }
    dims = {"H-1": h_minus.dimension, "CA": ca_alg.dim, "SA": sa_alg.dim, "H0": h_zero.dimension}

    cert = Certificate(f"four-term sequence for ({s.name}, {a.name})")
    cert.add(
        "injective_h_minus1",
        None if ranks["inclusion"] == dims["H-1"] else f"rank {ranks['inclusion']} < {dims['H-1']}",
        dims["H-1"],
    )
    witness = next(
        (l for l, v in inclusion.items() if apply_linear(d_map, v)), None
    )
    if witness is None and ranks["inclusion"] + ranks["d"] != dims["CA"]:
        witness = f"im {ranks['inclusion']} + rank d {ranks['d']} != dim CA {dims['CA']}"
    cert.add("exact_at_ca", witness, dims["CA"])
    witness = next((l for l, v in d_map.items() if apply_linear(projection, v)), None)
    if witness is None and ranks["d"] + ranks["projection"] != dims["SA"]:
        witness = f"rank d {ranks['d']} + rank pr {ranks['projection']} != dim SA {dims['SA']}"
    cert.add("exact_at_sa", witness, dims["SA"])
    cert.add(
        "surjective_h0",
        None if ranks["projection"] == dims["H0"] else f"rank {ranks['projection']} < {dims['H0']}",
        dims["H0"],
    )
    cert.merge(verify_lie_morphism(ca_alg.as_lie(), sa_alg.as_lie(), d_map), "d_is_lie_morphism_")
    bookkeeping = None
    if dims["CA"] != dims["H-1"] + ranks["d"]:
        bookkeeping = "dim CA != dim H^-1 + rank d"
    elif dims["SA"] != ranks["d"] + dims["H0"]:
        bookkeeping = "dim SA != rank d + dim H^0"
    cert.add("dimension_bookkeeping", bookkeeping, 2)
    maps = {"inclusion": inclusion, "d": d_map, "projection": projection}
    return ExactnessCertificate(cert.subject, dims, ranks, maps, cert)


@dataclass(frozen=True)
class ShortExactSequence:
    """0 → A --i--> B --p--> C → 0."""

    i: DglaMorphism
    p: DglaMorphism

    @property
    def name(self) -> str:
        return f"0→{self.i.source.name}→{self.i.target.name}→{self.p.target.name}→0"


def _per_degree_defect(ses: ShortExactSequence) -> str:
    a, b, c = ses.i.source, ses.i.target, ses.p.target
    if b.space != ses.p.source.space:
        return "i and p do not share the middle dgla"
    for degree in sorted(set(a.space.degrees) | set(b.space.degrees) | set(c.space.degrees)):
        a_labels, b_labels, c_labels = (x.space.in_degree(degree) for x in (a, b, c))
        rank_i = images_rank([ses.i(Vec.basis(l)) for l in a_labels], b.labels)
        rank_p = images_rank([ses.p(Vec.basis(l)) for l in b_labels], c.labels)
        if rank_i != len(a_labels):
            return f"i is not injective in degree {degree}"
        if rank_p != len(c_labels):
            return f"p is not surjective in degree {degree}"
        if rank_i + rank_p != len(b_labels):
            return f"not exact at the middle in degree {degree}"
    for label in a.labels:
        if ses.p(ses.i(Vec.basis(label))):
            return f"p∘i != 0 on {label}"
    return ""


def _sequence_certificate(functor: Functor, s: Cdga, ses: ShortExactSequence) -> Certificate:
    identity = CdgaMorphism.identity(s)
    fi = induced_map(functor, identity, ses.i)
    fp = induced_map(functor, identity, ses.p, source=fi.target)
    fa, fb, fc = fi.source, fi.target, fp.target
    cert = Certificate(f"{functor.value} image of {ses.name} over {s.name}")
    rank_i = images_rank(list(fi.images.values()), fb.labels)
    rank_p = images_rank(list(fp.images.values()), fc.labels)
    cert.add("injective", None if rank_i == fa.dim else f"rank {rank_i} < {fa.dim}", fa.dim)
    cert.add("surjective", None if rank_p == fc.dim else f"rank {rank_p} < {fc.dim}", fc.dim)
    witness = next((l for l, v in fi.images.items() if fp(v)), None)
    if witness is None and rank_i + rank_p != fb.dim:
        witness = f"rank {rank_i} + {rank_p} != {fb.dim}"
    cert.add("exact_at_middle", witness, fb.dim)
    cert.merge(fi.certificate, "i_")
    cert.merge(fp.certificate, "p_")
    return cert


def ses_image(ses: ShortExactSequence, s: Cdga) -> dict[str, Certificate]:
    """
    CA and SA of a short exact sequence of dglas whose quotient is acyclic.
    Raises ``NonAcyclicQuotient`` with the first nonzero cohomology class.
    """
    for morphism in (ses.i, ses.p):
        cert = validate_dgla_morphism(morphism)
        if not cert.passed:
            raise ConstructionRejected(
                f"{cert.subject} is not a dgla morphism", cert.failures[0].witness or ""
            )
    defect = _per_degree_defect(ses)
    if defect:
        raise ConstructionRejected("not a short exact sequence", defect)
    quotient = ses.p.target
    report = is_acyclic(quotient.space, quotient.differential)
    if report is not None:
        witness = report.representatives[0].to_json()
        raise NonAcyclicQuotient(f"{quotient.name} is not acyclic", report.degree, str(witness))
    return {f.value: _sequence_certificate(f, s, ses) for f in (Functor.CA, Functor.SA)}


def central_extension_ses(extension: Dgla, base: Dgla, name: str = "") -> ShortExactSequence:
    """
    0 → center → extension → base → 0 for a central extension whose labels
    contain those of ``base``; the center keeps its own differential.
    """
    center_labels = [l for l in extension.labels if l not in base.space]
    space = GradedSpace(tuple((l, extension.degree(l)) for l in center_labels))
    columns: Mapping[str, Vec] = {l: extension.differential.column(l) for l in center_labels}
    differential = GradedMap(space, space, 1, columns)
    center = Dgla(name or f"center({extension.name})", space, {}, differential)
    i = DglaMorphism.from_images(center, extension, {l: {l: 1} for l in center_labels})
    p = DglaMorphism.from_images(extension, base, {l: {l: 1} for l in base.labels})
    return ShortExactSequence(i, p)
