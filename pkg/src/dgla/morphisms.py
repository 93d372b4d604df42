"""
Degree-0 maps between dglas and between CDGAs, with validators.
"""

from dataclasses import dataclass
from typing import Mapping, Optional

from src.dgla.cdga import Cdga
from src.dgla.certificate import Certificate
from src.dgla.dgla import Dgla
from src.linalg.graded import GradedMap
from src.linalg.vector import ScalarLike, Vec


@dataclass(frozen=True)
class DglaMorphism:
    source: Dgla
    target: Dgla
    map: GradedMap

    @classmethod
    def from_images(
        cls, source: Dgla, target: Dgla, images: Mapping[str, Mapping[str, ScalarLike]]
    ) -> "DglaMorphism":
        return cls(source, target, GradedMap(source.space, target.space, 0, dict(images)))

    @classmethod
    def identity(cls, dgla: Dgla) -> "DglaMorphism":
        return cls(dgla, dgla, GradedMap.identity(dgla.space))

    def __call__(self, vec) -> Vec:
        return self.map(vec)

    def compose(self, inner: "DglaMorphism") -> "DglaMorphism":
        """self ∘ inner."""
        return DglaMorphism(inner.source, self.target, self.map.compose(inner.map))


@dataclass(frozen=True)
class CdgaMorphism:
    source: Cdga
    target: Cdga
    map: GradedMap

    @classmethod
    def from_images(
        cls, source: Cdga, target: Cdga, images: Mapping[str, Mapping[str, ScalarLike]]
    ) -> "CdgaMorphism":
        return cls(source, target, GradedMap(source.space, target.space, 0, dict(images)))

    @classmethod
    def identity(cls, cdga: Cdga) -> "CdgaMorphism":
        return cls(cdga, cdga, GradedMap.identity(cdga.space))

    def __call__(self, vec) -> Vec:
        return self.map(vec)

    def compose(self, inner: "CdgaMorphism") -> "CdgaMorphism":
        return CdgaMorphism(inner.source, self.target, self.map.compose(inner.map))


def _commutes_with_d(f: GradedMap, d_source: GradedMap, d_target: GradedMap) -> Optional[str]:
    for label in f.source.labels:
        e = Vec.basis(label)
        if f(d_source(e)) != d_target(f(e)):
            return f"d fails to commute on {label}"
    return None


def validate_dgla_morphism(f: DglaMorphism) -> Certificate:
    cert = Certificate(f"dgla morphism {f.source.name} → {f.target.name}")
    cert.add("degree", None if f.map.degree == 0 else f"degree {f.map.degree}", 1)
    cert.add(
        "differential",
        _commutes_with_d(f.map, f.source.differential, f.target.differential),
        f.source.dim,
    )
    witness = None
    for a in f.source.labels:
        fa = f(Vec.basis(a))
        for b in f.source.labels:
            if f(f.source.bracket_basis(a, b)) != f.target.bracket(fa, f(Vec.basis(b))):
                witness = f"bracket fails on ({a}, {b})"
                break
        if witness:
            break
    cert.add("bracket", witness, f.source.dim**2)
    return cert


def validate_cdga_morphism(f: CdgaMorphism) -> Certificate:
    cert = Certificate(f"CDGA morphism {f.source.name} → {f.target.name}")
    unit_ok = f(Vec.basis(f.source.unit)) == Vec.basis(f.target.unit)
    cert.add("unit", None if unit_ok else "unit is not preserved", 1)
    cert.add(
        "differential",
        _commutes_with_d(f.map, f.source.differential, f.target.differential),
        f.source.dim,
    )
    witness = None
    for a in f.source.labels:
        fa = f(Vec.basis(a))
        for b in f.source.labels:
            if f(f.source.product_basis(a, b)) != f.target.multiply(fa, f(Vec.basis(b))):
                witness = f"product fails on ({a}, {b})"
                break
        if witness:
            break
    cert.add("product", witness, f.source.dim**2)
    return cert
