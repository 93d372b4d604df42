"""
The tensor dgla Ω(S)⊗A and the Koszul-signed S-linear extension of
operators and bilinear maps.

Conventions:
    [φ⊗a, ψ⊗b] = (−1)^{|a||ψ|} φψ⊗[a,b]
    d(φ⊗a)     = dφ⊗a + (−1)^{|φ|} φ⊗da
    (1⊗T)(φ⊗v) = (−1)^{|T||φ|} φ⊗Tv
"""

from fractions import Fraction
from typing import Callable, Mapping, Optional

from src.dgla.cdga import Cdga
from src.dgla.dgla import Dgla, koszul_sign, parity_sign
from src.linalg.graded import TENSOR_SEPARATOR, GradedMap, GradedSpace, tensor, tensor_label
from src.linalg.vector import Vec

Pairing = Callable[[str, str], Mapping[str, Fraction]]


def split_label(label: str) -> tuple[str, str]:
    left, _, right = label.partition(TENSOR_SEPARATOR)
    return left, right


def tensor_vector(phi: Mapping[str, Fraction], a: Mapping[str, Fraction]) -> Vec:
    return Vec((tensor_label(f, x), p * q) for f, p in phi.items() for x, q in a.items())


def pure(phi: str, a: str, coefficient: Fraction = Fraction(1)) -> Vec:
    return Vec.basis(tensor_label(phi, a), coefficient)


def tensor_bilinear(
    s: Cdga,
    degree: Callable[[str], int],
    pairing: Pairing,
    u: Mapping[str, Fraction],
    v: Mapping[str, Fraction],
) -> Vec:
    """S-linear extension (φ⊗a, ψ⊗b) ↦ (−1)^{|a||ψ|} φψ⊗pairing(a, b)."""
    result = Vec()
    for left, p in u.items():
        phi, a = split_label(left)
        for right, q in v.items():
            psi, b = split_label(right)
            value = pairing(a, b)
            if not value:
                continue
            product = s.product_basis(phi, psi)
            if not product:
                continue
            sign = koszul_sign(degree(a), s.degree(psi))
            result = result.add_scaled(tensor_vector(product, value), p * q * sign)
    return result


def koszul_extend(s: Cdga, op: GradedMap) -> GradedMap:
    """1⊗T on S⊗V with the Koszul sign of moving T past φ."""
    source = tensor(s.space, op.source)
    target = tensor(s.space, op.target)
    columns: dict[str, Vec] = {}
    for phi in s.labels:
        sign = koszul_sign(op.degree, s.degree(phi))
        for v, image in op.columns.items():
            columns[tensor_label(phi, v)] = tensor_vector({phi: Fraction(sign)}, image)
    return GradedMap(source, target, op.degree, columns)


def tensor_differential(s: Cdga, space: GradedSpace, d: GradedMap) -> GradedMap:
    """d_{S⊗V}(φ⊗v) = dφ⊗v + (−1)^{|φ|} φ⊗dv."""
    total = tensor(s.space, space)
    columns: dict[str, Vec] = {}
    for phi in s.labels:
        dphi = s.d(Vec.basis(phi))
        for v in space.labels:
            image = tensor_vector(dphi, {v: Fraction(1)})
            image = image.add_scaled(
                tensor_vector({phi: Fraction(1)}, d.column(v)), parity_sign(s.degree(phi))
            )
            columns[tensor_label(phi, v)] = image
    return GradedMap(total, total, d.degree, columns)


def tensor_dgla(s: Cdga, a: Dgla, name: Optional[str] = None) -> Dgla:
    """Ω(S)⊗A as a dgla, built from nonzero S-products times nonzero A-brackets."""
    space = tensor(s.space, a.space)
    table: dict[tuple[str, str], Vec] = {}
    for (phi, psi), product in s.structure.items():
        for (x, y), value in a.structure.items():
            sign = koszul_sign(a.degree(x), s.degree(psi))
            table[(tensor_label(phi, x), tensor_label(psi, y))] = (
                tensor_vector(product, value) * sign
            )
    differential = tensor_differential(s, a.space, a.differential)
    return Dgla(name or f"{s.name}⊗{a.name}", space, table, differential)
