"""
Maps induced on current algebras by CDGA and dgla morphisms, and the
identification CA(S, C𝔤) ≅ A⁰(S)⊗𝔤 ≅ SA(S, C𝔤).
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Mapping, Optional, Sequence

from src.constructions.cone import I, cone
from src.dgla.cdga import Cdga
from src.dgla.certificate import Certificate
from src.dgla.errors import ConstructionRejected
from src.dgla.lie import LieAlgebra
from src.dgla.morphisms import (
    CdgaMorphism,
    DglaMorphism,
    validate_cdga_morphism,
    validate_dgla_morphism,
)
from src.dgla.tensor import split_label, tensor_vector
from src.functors.current import CurrentAlgebra, Functor, ca, current_lie, sa
from src.linalg.echelon import SpanSolver, rref
from src.linalg.graded import tensor_label
from src.linalg.vector import Vec


def apply_linear(images: Mapping[str, Vec], vec: Mapping[str, Fraction]) -> Vec:
    result = Vec()
    for label, coeff in vec.items():
        image = images.get(label)
        if image:
            result = result.add_scaled(image, coeff)
    return result


def images_rank(images: Sequence[Mapping[str, Fraction]], labels: Sequence[str]) -> int:
    position = {l: j for j, l in enumerate(labels)}
    rows = [{position[l]: v for l, v in vec.items()} for vec in images]
    return rref(rows, len(labels)).rank


def verify_lie_morphism(
    source: LieAlgebra, target: LieAlgebra, images: Mapping[str, Vec], subject: str = ""
) -> Certificate:
    """f([x,y]) = [f(x), f(y)] on every pair of source basis vectors."""
    cert = Certificate(subject or f"Lie morphism {source.name} → {target.name}")
    witness = None
    for x, y in product(source.basis, repeat=2):
        lhs = apply_linear(images, source.bracket_basis(x, y))
        rhs = target.bracket(images.get(x, Vec()), images.get(y, Vec()))
        if lhs != rhs:
            witness = f"bracket fails on ({x}, {y})"
            break
    cert.add("bracket", witness, source.dim**2)
    return cert


@dataclass(frozen=True)
class LieMorphism:
    """Linear map between current algebras given on basis labels."""

    source: CurrentAlgebra
    target: CurrentAlgebra
    images: dict
    certificate: Certificate = field(compare=False)

    def __call__(self, vec: Mapping[str, Fraction]) -> Vec:
        return apply_linear(self.images, vec)

    def compose(self, inner: "LieMorphism") -> dict[str, Vec]:
        """Images of self ∘ inner."""
        return {label: self(image) for label, image in inner.images.items()}

    def first_difference(self, images: Mapping[str, Vec]) -> Optional[str]:
        """First source label on which self and ``images`` disagree."""
        for label in self.source.labels:
            if self(Vec.basis(label)) != apply_linear(images, Vec.basis(label)):
                return label
        return None

    def equals(self, images: Mapping[str, Vec]) -> bool:
        return self.first_difference(images) is None


def tensor_map(f_s: CdgaMorphism, f_a: DglaMorphism, vec: Mapping[str, Fraction]) -> Vec:
    """(f_S⊗f_A)(φ⊗a) = f_S(φ)⊗f_A(a)."""
    result = Vec()
    for label, coeff in vec.items():
        phi, a = split_label(label)
        result = result.add_scaled(
            tensor_vector(f_s(Vec.basis(phi)), f_a(Vec.basis(a))), coeff
        )
    return result


def _require(cert: Certificate) -> None:
    if not cert.passed:
        failure = cert.failures[0]
        raise ConstructionRejected(f"{cert.subject}: {failure.name} fails", failure.witness or "")


def induced_map(
    functor: Functor,
    f_s: CdgaMorphism,
    f_a: DglaMorphism,
    source: Optional[CurrentAlgebra] = None,
    target: Optional[CurrentAlgebra] = None,
) -> LieMorphism:
    """
    F(f_S, f_A) for F ∈ {CA, SA}: covariant in the CDGA model (the
    pull-back Ω(S) → Ω(S')) and in the dgla.
    """
    _require(validate_cdga_morphism(f_s))
    _require(validate_dgla_morphism(f_a))
    build = ca if functor is Functor.CA else sa
    source = source or build(f_s.source, f_a.source)
    target = target or build(f_s.target, f_a.target)
    images = {
        label: target.project(tensor_map(f_s, f_a, source.lift(Vec.basis(label))))
        for label in source.labels
    }
    subject = f"{functor.value} map {source.name} → {target.name}"
    cert = verify_lie_morphism(source.as_lie(), target.as_lie(), images, subject)
    witness = None
    for label in source.total.labels:
        e = Vec.basis(label)
        if tensor_map(f_s, f_a, source.total.d(e)) != target.total.d(tensor_map(f_s, f_a, e)):
            witness = f"d fails to commute on {label}"
            break
    cert.add("differential", witness, source.total.dim)
    return LieMorphism(source, target, images, cert)


def ca_map(f_s: CdgaMorphism, f_a: DglaMorphism) -> LieMorphism:
    return induced_map(Functor.CA, f_s, f_a)


def sa_map(f_s: CdgaMorphism, f_a: DglaMorphism) -> LieMorphism:
    return induced_map(Functor.SA, f_s, f_a)


def verify_functoriality(
    functor: Functor,
    inner: tuple[CdgaMorphism, DglaMorphism],
    outer: tuple[CdgaMorphism, DglaMorphism],
) -> Certificate:
    """
    F(g∘f) = F(g)∘F(f) for F ∈ {CA, SA}, where f = inner and g = outer are
    pairs (CDGA morphism, dgla morphism) composed factor by factor.
    """
    first = induced_map(functor, *inner)
    second = induced_map(functor, *outer, source=first.target)
    composite = induced_map(
        functor,
        outer[0].compose(inner[0]),
        outer[1].compose(inner[1]),
        source=first.source,
        target=second.target,
    )
    cert = Certificate(
        f"{functor.value} functoriality {first.source.name} → {first.target.name} "
        f"→ {second.target.name}"
    )
    cert.merge(first.certificate, "inner_")
    cert.merge(second.certificate, "outer_")
    cert.merge(composite.certificate, "composite_")
    label = composite.first_difference(second.compose(first))
    cert.add("composition", f"differs on {label}" if label else None, first.source.dim)
    return cert


def bijectivity_defect(
    images: Mapping[str, Vec], source_labels: Sequence[str], target_labels: Sequence[str]
) -> Optional[str]:
    if len(source_labels) != len(target_labels):
        return f"dimensions differ: {len(source_labels)} != {len(target_labels)}"
    rank = images_rank([images.get(l, Vec()) for l in source_labels], target_labels)
    if rank != len(target_labels):
        return f"rank {rank} < {len(target_labels)}"
    return None


def inverse_images(
    images: Mapping[str, Vec], source_labels: Sequence[str], target_labels: Sequence[str]
) -> dict[str, Vec]:
    """Inverse of a bijective linear map, basis label by basis label."""
    solver = SpanSolver([images.get(l, Vec()) for l in source_labels], target_labels)
    inverse: dict[str, Vec] = {}
    for label in target_labels:
        coords = solver.coordinates(Vec.basis(label))
        if coords is None:
            raise ConstructionRejected("map is not surjective", label)
        inverse[label] = Vec(zip(source_labels, coords))
    return inverse


@dataclass(frozen=True)
class CurrentIdentification:
    """Mutually inverse maps A⁰(S)⊗𝔤 ⇄ CA(S, C𝔤) and A⁰(S)⊗𝔤 → SA(S, C𝔤)."""

    current: LieAlgebra
    ca: CurrentAlgebra
    sa: CurrentAlgebra
    to_ca: dict
    from_ca: dict
    to_sa: dict
    certificate: Certificate


def current_iso(s: Cdga, g: LieAlgebra) -> CurrentIdentification:
    """
    φ⊗x ↦ [φ⊗I(x)] in CA and φ⊗x ↦ d(φ⊗I(x)) = dφ⊗I(x) + φ⊗L(x) in SA;
    d: CA → SA is then an isomorphism of Lie algebras.
    """
    a = cone(g)
    current = current_lie(s, g)
    ca_alg, sa_alg = ca(s, a), sa(s, a)
    cert = Certificate(f"current algebra identification over {s.name} for {g.name}")

    to_ca, to_sa = {}, {}
    for label in current.basis:
        phi, x = split_label(label)
        rep = Vec.basis(tensor_label(phi, I(x)))
        to_ca[label] = ca_alg.project(rep)
        to_sa[label] = sa_alg.project(ca_alg.total.d(rep))

    cert.add("ca_bijective", bijectivity_defect(to_ca, current.basis, ca_alg.labels), current.dim)
    cert.add("sa_bijective", bijectivity_defect(to_sa, current.basis, sa_alg.labels), current.dim)
    cert.merge(verify_lie_morphism(current, ca_alg.as_lie(), to_ca), "ca_")
    cert.merge(verify_lie_morphism(current, sa_alg.as_lie(), to_sa), "sa_")

    from_ca: dict[str, Vec] = {}
    if cert.check("ca_bijective").passed:
        from_ca = inverse_images(to_ca, current.basis, ca_alg.labels)
        transported = {
            (x, y): apply_linear(from_ca, value) for (x, y), value in ca_alg.structure.items()
        }
        relabel = {l: from_ca[l] for l in ca_alg.labels}
        mismatch = None
        for x, y in product(ca_alg.labels, repeat=2):
            expected = current.bracket(relabel[x], relabel[y])
            if transported.get((x, y), Vec()) != expected:
                mismatch = f"({x}, {y})"
                break
        cert.add("structure_constants", mismatch, ca_alg.dim**2)

    d_images = {
        label: sa_alg.project(ca_alg.total.d(ca_alg.lift(Vec.basis(label))))
        for label in ca_alg.labels
    }
    cert.add("d_bijective", bijectivity_defect(d_images, ca_alg.labels, sa_alg.labels), ca_alg.dim)
    cert.merge(verify_lie_morphism(ca_alg.as_lie(), sa_alg.as_lie(), d_images), "d_")
    return CurrentIdentification(current, ca_alg, sa_alg, to_ca, from_ca, to_sa, cert)
