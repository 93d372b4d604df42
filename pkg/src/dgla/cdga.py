"""
Finite commutative differential graded algebras standing in for
de Rham complexes, with exterior algebras and tensor products.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Optional, Sequence

from src.dgla.certificate import Certificate
from src.dgla.dgla import koszul_sign, parity_sign
from src.dgla.errors import DegreeError
from src.linalg.graded import GradedMap, GradedSpace
from src.linalg.vector import ScalarLike, Vec, to_scalar

UNIT = "1"


@dataclass(frozen=True)
class Cdga:
    """
    Graded-commutative unital algebra with a degree +1 differential.

    ``structure[(a, b)]`` is the product ab of basis elements (nonzero
    products only, both orders, unit products included). For exterior
    algebras ``monomials`` maps each label to its generator word.
    """

    name: str
    space: GradedSpace
    structure: dict
    unit: str
    differential: GradedMap
    monomials: dict = field(default_factory=dict)

    @classmethod
    def build(
        cls,
        name: str,
        space: GradedSpace,
        products: Mapping[tuple[str, str], Mapping[str, ScalarLike]],
        differential: Optional[Mapping[str, Mapping[str, ScalarLike]]] = None,
        unit: str = UNIT,
        complete: bool = True,
        monomials: Optional[Mapping[str, tuple[str, ...]]] = None,
    ) -> "Cdga":
        """
        Build from the products of non-unit basis elements.

        Unit products are added, and with ``complete`` the opposite order
        of each product follows from graded commutativity.
        """
        if unit not in space or space.degree(unit) != 0:
            raise DegreeError(f"{name}: unit {unit!r} must be a degree-0 basis element")
        table: dict[tuple[str, str], Vec] = {}
        for label in space.labels:
            table[(unit, label)] = Vec.basis(label)
            table[(label, unit)] = Vec.basis(label)
        for (a, b), value in products.items():
            vec = Vec(value)
            expected = space.degree(a) + space.degree(b)
            for label in vec:
                if space.degree(label) != expected:
                    raise DegreeError(
                        f"{name}: product {a}·{b} has a term outside degree {expected}"
                    )
            if vec:
                table[(a, b)] = vec
        if complete:
            for (a, b), vec in list(table.items()):
                if (b, a) not in table:
                    table[(b, a)] = vec * koszul_sign(space.degree(a), space.degree(b))
        d = GradedMap(space, space, 1, {k: Vec(v) for k, v in (differential or {}).items()})
        return cls(name, space, table, unit, d, dict(monomials or {}))

    @property
    def labels(self) -> tuple[str, ...]:
        return self.space.labels

    @property
    def dim(self) -> int:
        return self.space.dim

    def degree(self, label: str) -> int:
        return self.space.degree(label)

    def product_basis(self, a: str, b: str) -> Vec:
        return self.structure.get((a, b), Vec())

    def multiply(self, u: Mapping[str, Fraction], v: Mapping[str, Fraction]) -> Vec:
        result = Vec()
        for a, x in u.items():
            for b, y in v.items():
                value = self.structure.get((a, b))
                if value:
                    result = result.add_scaled(value, x * y)
        return result

    def d(self, vec: Mapping[str, Fraction]) -> Vec:
        return self.differential(vec)

    def to_json(self) -> dict:
        index = self.space.index
        products = [
            [a, b, c, str(value)]
            for (a, b) in sorted(self.structure, key=lambda k: (index(k[0]), index(k[1])))
            if self.unit not in (a, b)
            for c, value in sorted(self.structure[(a, b)].items(), key=lambda t: index(t[0]))
        ]
        return {
            "name": self.name,
            "basis": self.space.to_json(),
            "unit": self.unit,
            "products": products,
            "differential": [[t, s, str(v)] for t, s, v in self.differential.entries],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Cdga":
        space = GradedSpace(tuple((label, int(degree)) for label, degree in data["basis"]))
        products: dict[tuple[str, str], dict[str, ScalarLike]] = {}
        for a, b, c, value in data["products"]:
            products.setdefault((a, b), {})[c] = value
        differential: dict[str, dict[str, ScalarLike]] = {}
        for tgt, src, value in data["differential"]:
            differential.setdefault(src, {})[tgt] = value
        return cls.build(data["name"], space, products, differential, data.get("unit", UNIT))


def validate_cdga(c: Cdga) -> Certificate:
    """Unit law, graded commutativity, associativity, Leibniz and d² = 0 on basis tuples."""
    cert = Certificate(f"CDGA {c.name}")
    basis = c.labels

    witness = None
    for a in basis:
        e = Vec.basis(a)
        if c.product_basis(c.unit, a) != e or c.product_basis(a, c.unit) != e:
            witness = f"unit fails on {a}"
            break
    cert.add("unit", witness, len(basis))

    witness = None
    for a in basis:
        for b in basis:
            sign = koszul_sign(c.degree(a), c.degree(b))
            if c.product_basis(a, b) != c.product_basis(b, a) * sign:
                witness = f"({a}, {b})"
                break
        if witness:
            break
    cert.add("graded_commutativity", witness, len(basis) ** 2)

    witness = None
    for a in basis:
        ea = Vec.basis(a)
        for b in basis:
            ab = c.product_basis(a, b)
            eb = Vec.basis(b)
            for x in basis:
                ex = Vec.basis(x)
                if c.multiply(ab, ex) != c.multiply(ea, c.multiply(eb, ex)):
                    witness = f"({a}, {b}, {x})"
                    break
            if witness:
                break
        if witness:
            break
    cert.add("associativity", witness, len(basis) ** 3)

    witness = None
    for a in basis:
        for b in basis:
            ea, eb = Vec.basis(a), Vec.basis(b)
            lhs = c.d(c.product_basis(a, b))
            rhs = c.multiply(c.d(ea), eb).add_scaled(
                c.multiply(ea, c.d(eb)), parity_sign(c.degree(a))
            )
            if lhs != rhs:
                witness = f"({a}, {b})"
                break
        if witness:
            break
    cert.add("leibniz", witness, len(basis) ** 2)

    witness = None
    for a in basis:
        if c.d(c.d(Vec.basis(a))):
            witness = f"d(d({a})) != 0"
            break
    cert.add("d_squared", witness, len(basis))
    return cert


def _word_label(word: Sequence[str]) -> str:
    return "".join(word) if word else UNIT


def _merge_sign(left: Sequence[str], right: Sequence[str], order: Mapping[str, int]) -> int:
    """Sign of sorting the concatenated odd word left+right."""
    inversions = sum(1 for a in left for b in right if order[a] > order[b])
    return parity_sign(inversions)


def exterior_algebra(
    name: str,
    generators: Sequence[str],
    differential: Optional[Mapping[str, Mapping[str, ScalarLike]]] = None,
) -> Cdga:
    """
    Λ(generators) with every generator in degree 1. Monomials are
    labelled by their generator words in generator order ("1", "a", "ab").
    """
    order = {g: i for i, g in enumerate(generators)}
    words = [w for n in range(len(generators) + 1) for w in combinations(generators, n)]
    space = GradedSpace(tuple((_word_label(w), len(w)) for w in words))
    products: dict[tuple[str, str], dict[str, int]] = {}
    for left in words[1:]:
        for right in words[1:]:
            if set(left) & set(right):
                continue
            merged = tuple(sorted(left + right, key=order.__getitem__))
            products[(_word_label(left), _word_label(right))] = {
                _word_label(merged): _merge_sign(left, right, order)
            }
    monomials = {_word_label(w): tuple(w) for w in words}
    return Cdga.build(name, space, products, differential, complete=False, monomials=monomials)


def exterior_contraction(c: Cdga, values: Mapping[str, ScalarLike]) -> GradedMap:
    """
    The odd derivation of an exterior algebra sending generator g to
    values[g]·1 (degree −1).
    """
    if not c.monomials:
        raise ValueError(f"{c.name} is not an exterior algebra")
    by_word = {word: label for label, word in c.monomials.items()}
    columns: dict[str, Vec] = {}
    for label, word in c.monomials.items():
        image = Vec()
        for position, generator in enumerate(word):
            rest = by_word[word[:position] + word[position + 1:]]
            value = to_scalar(values.get(generator, 0)) * parity_sign(position)
            image = image.add_scaled(Vec.basis(rest), value)
        columns[label] = image
    return GradedMap(c.space, c.space, -1, columns)


def _juxtapose(left: str, right: str, unit_left: str, unit_right: str) -> str:
    if left == unit_left:
        return UNIT if right == unit_right else right
    if right == unit_right:
        return left
    return left + right


def cdga_tensor(a: Cdga, b: Cdga, name: str) -> Cdga:
    """
    a ⊗ b with (x⊗y)(x'⊗y') = (−1)^{|y||x'|} xx'⊗yy' and
    d(x⊗y) = dx⊗y + (−1)^{|x|} x⊗dy. Labels juxtapose, the unit absorbs.
    """
    label = {
        (x, y): _juxtapose(x, y, a.unit, b.unit) for x in a.labels for y in b.labels
    }
    space = GradedSpace(
        tuple((label[(x, y)], a.degree(x) + b.degree(y)) for x in a.labels for y in b.labels)
    )

    def embed(left: Mapping[str, Fraction], right: Mapping[str, Fraction]) -> Vec:
        return Vec(
            (label[(x, y)], p * q) for x, p in left.items() for y, q in right.items()
        )

    products: dict[tuple[str, str], Vec] = {}
    for x in a.labels:
        for y in b.labels:
            for x2 in a.labels:
                xx = a.product_basis(x, x2)
                if not xx:
                    continue
                for y2 in b.labels:
                    yy = b.product_basis(y, y2)
                    if yy:
                        sign = koszul_sign(b.degree(y), a.degree(x2))
                        products[(label[(x, y)], label[(x2, y2)])] = embed(xx, yy) * sign
    differential = {
        label[(x, y)]: embed(a.d(Vec.basis(x)), Vec.basis(y))
        + embed(Vec.basis(x), b.d(Vec.basis(y))) * parity_sign(a.degree(x))
        for x in a.labels
        for y in b.labels
    }
    return Cdga.build(name, space, products, differential, complete=False)
