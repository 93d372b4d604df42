"""
Chevalley–Eilenberg cochains of a Lie algebra with coefficients in a
finite-dimensional representation, and invariant symmetric forms.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Mapping, Optional, Sequence

from src.dgla.certificate import Certificate
from src.dgla.cohomology import CohomologyReport, cohomology
from src.dgla.dgla import parity_sign
from src.dgla.lie import Form, LieAlgebra
from src.linalg.echelon import SpanSolver, nullspace
from src.linalg.graded import GradedMap, GradedSpace
from src.linalg.vector import Vec

Cochain = dict[tuple[str, ...], Vec]


@dataclass(frozen=True)
class Representation:
    """``action[x]`` is the operator of x on ``space`` (all in degree 0)."""

    name: str
    g: LieAlgebra
    space: GradedSpace
    action: dict

    @classmethod
    def trivial(cls, g: LieAlgebra, label: str = "1") -> "Representation":
        space = GradedSpace(((label, 0),))
        action = {x: GradedMap.zero(space, space) for x in g.basis}
        return cls(f"trivial({g.name})", g, space, action)

    @classmethod
    def adjoint(cls, g: LieAlgebra) -> "Representation":
        space = GradedSpace(tuple((x, 0) for x in g.basis))
        action = {
            x: GradedMap(space, space, 0, {y: g.bracket_basis(x, y) for y in g.basis})
            for x in g.basis
        }
        return cls(f"ad({g.name})", g, space, action)

    @classmethod
    def coadjoint(cls, g: LieAlgebra) -> "Representation":
        space = GradedSpace(tuple((xi, 0) for xi in g.dual_basis))
        action = {
            x: GradedMap(
                space, space, 0, {xi: g.coadjoint(x, Vec.basis(xi)) for xi in g.dual_basis}
            )
            for x in g.basis
        }
        return cls(f"ad*({g.name})", g, space, action)

    @property
    def labels(self) -> tuple[str, ...]:
        return self.space.labels

    def act(self, u: Mapping[str, Fraction], m: Mapping[str, Fraction]) -> Vec:
        result = Vec()
        for x, coeff in u.items():
            result = result.add_scaled(self.action[x](m), coeff)
        return result


def validate_representation(rep: Representation) -> Certificate:
    cert = Certificate(f"representation {rep.name}")
    g = rep.g
    witness = None
    for x in g.basis:
        for y in g.basis:
            for m in rep.labels:
                e = Vec.basis(m)
                lhs = rep.action[x](rep.action[y](e)) - rep.action[y](rep.action[x](e))
                if lhs != rep.act(g.bracket_basis(x, y), e):
                    witness = f"({x}, {y}, {m})"
                    break
            if witness:
                break
        if witness:
            break
    cert.add("homomorphism", witness, g.dim**2 * len(rep.labels))
    return cert


def _sort_args(g: LieAlgebra, args: Sequence[str]) -> Optional[tuple[tuple[str, ...], int]]:
    """Increasing reordering of basis arguments with its sign; None on a repeat."""
    if len(set(args)) != len(args):
        return None
    index = {x: i for i, x in enumerate(g.basis)}
    order = sorted(range(len(args)), key=lambda i: index[args[i]])
    inversions = sum(
        1 for i in range(len(order)) for j in range(i + 1, len(order)) if order[i] > order[j]
    )
    return tuple(args[i] for i in order), parity_sign(inversions)


def evaluate(
    g: LieAlgebra,
    cochain: Mapping[tuple[str, ...], Vec],
    args: Sequence[Mapping[str, Fraction]],
) -> Vec:
    """Alternating cochain given on increasing tuples, evaluated on arbitrary vectors."""
    result = Vec()

    def expand(
        prefix: tuple[str, ...], coeff: Fraction, rest: Sequence[Mapping[str, Fraction]]
    ) -> None:
        nonlocal result
        if not rest:
            ordered = _sort_args(g, prefix)
            if ordered is None:
                return
            key, sign = ordered
            value = cochain.get(key)
            if value:
                result = result.add_scaled(value, coeff * sign)
            return
        for x, c in rest[0].items():
            expand(prefix + (x,), coeff * c, rest[1:])

    expand((), Fraction(1), list(args))
    return result


def ce_differential(rep: Representation, cochain: Mapping[tuple[str, ...], Vec], n: int) -> Cochain:
    """
    (dc)(x0..xn) = Σ (−1)^i x_i·c(.., x̂_i, ..)
                 + Σ_{i<j} (−1)^{i+j} c([x_i,x_j], .., x̂_i, .., x̂_j, ..).
    """
    g = rep.g
    out: Cochain = {}
    for args in combinations(g.basis, n + 1):
        vecs = [Vec.basis(x) for x in args]
        total = Vec()
        for i in range(n + 1):
            rest = vecs[:i] + vecs[i + 1:]
            total = total.add_scaled(rep.act(vecs[i], evaluate(g, cochain, rest)), parity_sign(i))
        for i, j in combinations(range(n + 1), 2):
            rest = [v for k, v in enumerate(vecs) if k not in (i, j)]
            bracket = g.bracket_basis(args[i], args[j])
            if bracket:
                total = total.add_scaled(evaluate(g, cochain, [bracket] + rest), parity_sign(i + j))
        if total:
            out[args] = total
    return out


@dataclass(frozen=True)
class CeComplex:
    """
    Cochains C^0..C^top with labels "x^y→m" (increasing x, y, ..; module
    label m). The differential is defined out of degrees below ``top``.
    """

    rep: Representation
    top: int
    space: GradedSpace = field(init=False)
    differential: GradedMap = field(init=False)

    def __post_init__(self) -> None:
        basis = [
            (self.label(args, m), n)
            for n in range(self.top + 1)
            for args in combinations(self.rep.g.basis, n)
            for m in self.rep.labels
        ]
        space = GradedSpace(tuple(basis))
        object.__setattr__(self, "space", space)
        columns: dict[str, Vec] = {}
        for n in range(self.top):
            for args in combinations(self.rep.g.basis, n):
                for m in self.rep.labels:
                    image = ce_differential(self.rep, {args: Vec.basis(m)}, n)
                    columns[self.label(args, m)] = self.from_values(image)
        object.__setattr__(self, "differential", GradedMap(space, space, 1, columns))

    @staticmethod
    def label(args: Sequence[str], m: str) -> str:
        return f"{'^'.join(args)}→{m}"

    @staticmethod
    def parse(label: str) -> tuple[tuple[str, ...], str]:
        head, _, m = label.partition("→")
        return (tuple(head.split("^")) if head else ()), m

    def from_values(self, values: Mapping[tuple[str, ...], Mapping[str, Fraction]]) -> Vec:
        result = Vec()
        for args, vec in values.items():
            for m, coeff in vec.items():
                result = result + Vec.basis(self.label(args, m), coeff)
        return result

    def to_values(self, vec: Mapping[str, Fraction]) -> Cochain:
        out: Cochain = {}
        for label, coeff in vec.items():
            args, m = self.parse(label)
            out[args] = out.get(args, Vec()) + Vec.basis(m, coeff)
        return {k: v for k, v in out.items() if v}


def ce_cohomology(g: LieAlgebra, rep: Representation, n: int) -> CohomologyReport:
    """H^n(g; rep) with representatives over "x^y→m" labels."""
    if rep.g is not g and rep.g.basis != g.basis:
        raise ValueError(f"{rep.name} is not a representation of {g.name}")
    complex_ = CeComplex(rep, n + 1)
    return cohomology(complex_.space, complex_.differential, n)


def _multiset_label(args: Sequence[str]) -> str:
    return "|".join(args)


def invariant_forms(g: LieAlgebra, degree: int) -> list[Form]:
    """
    Basis of (S^degree 𝔤*)^𝔤: the kernel of p ↦ Σ_i p(.., [x, z_i], ..) on
    symmetric forms, one unknown per multiset of basis vectors.
    """
    index = {x: i for i, x in enumerate(g.basis)}
    unknowns = list(combinations_with_replacement(g.basis, degree))
    position = {args: j for j, args in enumerate(unknowns)}

    def key(args: Sequence[str]) -> tuple[str, ...]:
        return tuple(sorted(args, key=index.__getitem__))

    rows: list[dict[int, Fraction]] = []
    for x in g.basis:
        for args in unknowns:
            row: dict[int, Fraction] = {}
            for i, z in enumerate(args):
                for w, coeff in g.bracket_basis(x, z).items():
                    j = position[key(args[:i] + (w,) + args[i + 1:])]
                    row[j] = row.get(j, Fraction(0)) + coeff
            row = {j: v for j, v in row.items() if v}
            if row:
                rows.append(row)
    forms = []
    for null in nullspace(rows, len(unknowns)):
        forms.append(Form.symmetric(degree, {unknowns[j]: v for j, v in null.items()}))
    return forms


def form_in_span(forms: Sequence[Form], form: Form) -> bool:
    """Whether ``form`` is a linear combination of ``forms`` (compared on all tuples)."""
    keys = sorted({k for f in list(forms) + [form] for k in f.values})
    labels = [_multiset_label(k) for k in keys]
    vectors = [Vec((_multiset_label(k), v) for k, v in f.values.items()) for f in forms]
    solver = SpanSolver(vectors, labels)
    target = Vec((_multiset_label(k), v) for k, v in form.values.items())
    return solver.coordinates(target) is not None
