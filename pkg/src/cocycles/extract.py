"""
Characteristic 2-cocycles of abelian extensions 0 → M → E → B → 0 read
off from a computed Lie algebra E and a linear splitting.
"""

from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Mapping, Optional, Sequence

from src.cocycles.chevalley import Representation, ce_differential
from src.constructions.cone import I, cone_parts
from src.dgla.certificate import Certificate
from src.dgla.errors import ConstructionRejected, InternalConsistencyError
from src.dgla.lie import LieAlgebra
from src.dgla.tensor import split_label
from src.functors.current import CurrentAlgebra, Functor, degree_space
from src.linalg.echelon import SpanSolver, kernel
from src.linalg.graded import GradedMap, GradedSpace, tensor_label
from src.linalg.vector import Vec


@dataclass(frozen=True)
class ExtensionSplitting:
    """
    A basis of E split as s(B) ⊕ M: ``section[b]`` and ``fiber[m]`` are
    vectors over the labels of E.
    """

    labels: tuple[str, ...]
    base_labels: tuple[str, ...]
    section: dict
    fiber_labels: tuple[str, ...]
    fiber: dict

    @classmethod
    def from_labels(
        cls, labels: Sequence[str], base_labels: Sequence[str], fiber_labels: Sequence[str]
    ) -> "ExtensionSplitting":
        return cls(
            tuple(labels),
            tuple(base_labels),
            {b: Vec.basis(b) for b in base_labels},
            tuple(fiber_labels),
            {m: Vec.basis(m) for m in fiber_labels},
        )

    @cached_property
    def _solver(self) -> SpanSolver:
        vectors = [self.section[b] for b in self.base_labels]
        vectors += [self.fiber[m] for m in self.fiber_labels]
        return SpanSolver(vectors, self.labels)

    def decompose(self, vec: Mapping[str, Fraction]) -> tuple[Vec, Vec]:
        """(base coordinates, fiber coordinates) of an element of E."""
        coords = self._solver.coordinates(vec)
        if coords is None:
            raise InternalConsistencyError("splitting does not span the extension")
        nb = len(self.base_labels)
        return Vec(zip(self.base_labels, coords[:nb])), Vec(zip(self.fiber_labels, coords[nb:]))

    def check(self) -> Optional[str]:
        if len(self.base_labels) + len(self.fiber_labels) != len(self.labels):
            return "section and fiber do not add up to the extension"
        if not self._solver.independent:
            return "section and fiber are linearly dependent"
        return None


@dataclass(frozen=True)
class Cocycle2:
    """σ(u, v) for basis labels of ``base``, valued in ``module``; zero pairs omitted."""

    base: LieAlgebra
    module: Representation
    values: dict

    def __call__(self, u: str, v: str) -> Vec:
        return self.values.get((u, v), Vec())

    def cochain(self) -> dict[tuple[str, ...], Vec]:
        """Values on increasing pairs, as a CE 2-cochain."""
        return {(u, v): self(u, v) for u, v in combinations(self.base.basis, 2) if self(u, v)}

    def nonzero_pairs(self) -> list[tuple[str, str]]:
        return [(u, v) for u, v in combinations(self.base.basis, 2) if self(u, v)]

    def to_json(self) -> list[list]:
        return [[u, v, self(u, v).to_json()] for u, v in self.nonzero_pairs()]

    @classmethod
    def from_function(
        cls, base: LieAlgebra, module: Representation, value: Callable[[str, str], Vec]
    ) -> "Cocycle2":
        values = {}
        for u, v in product(base.basis, repeat=2):
            result = value(u, v)
            if result:
                values[(u, v)] = result
        return cls(base, module, values)


def validate_cocycle(sigma: Cocycle2) -> Certificate:
    """Antisymmetry and the cocycle identity with the module action."""
    cert = Certificate(f"2-cocycle on {sigma.base.name}")
    witness = None
    for u, v in product(sigma.base.basis, repeat=2):
        if sigma(u, v) != -sigma(v, u):
            witness = f"σ({u},{v}) != -σ({v},{u})"
            break
    cert.add("antisymmetry", witness, sigma.base.dim**2)
    defect = ce_differential(sigma.module, sigma.cochain(), 2)
    witness = None
    if defect:
        args = sorted(defect)[0]
        witness = f"dσ{args} = {defect[args].to_json()}"
    cert.add("cocycle_identity", witness, len(list(combinations(sigma.base.basis, 3))))
    return cert


def extract_cocycle(total: LieAlgebra, splitting: ExtensionSplitting, name: str = "") -> Cocycle2:
    """
    σ(u,v) = fiber component of [s(u), s(v)] − s([u,v]_B). The fiber must
    be an abelian ideal; the module action is x·m = [s(x), m].
    """
    problem = splitting.check()
    if problem:
        raise ConstructionRejected("not a splitting", problem)
    for m, n in product(splitting.fiber_labels, repeat=2):
        if total.bracket(splitting.fiber[m], splitting.fiber[n]):
            raise ConstructionRejected("fiber is not abelian", f"[{m}, {n}]")
    module_space = GradedSpace(tuple((m, 0) for m in splitting.fiber_labels))
    action: dict[str, GradedMap] = {}
    for b in splitting.base_labels:
        columns = {}
        for m in splitting.fiber_labels:
            bracket = total.bracket(splitting.section[b], splitting.fiber[m])
            base_part, fiber_part = splitting.decompose(bracket)
            if base_part:
                raise ConstructionRejected("fiber is not an ideal", f"[{b}, {m}]")
            columns[m] = fiber_part
        action[b] = GradedMap(module_space, module_space, 0, columns)

    table: dict[tuple[str, str], Vec] = {}
    values: dict[tuple[str, str], Vec] = {}
    for u, v in product(splitting.base_labels, repeat=2):
        bracket = total.bracket(splitting.section[u], splitting.section[v])
        base_part, fiber_part = splitting.decompose(bracket)
        if base_part:
            table[(u, v)] = base_part
        if fiber_part:
            values[(u, v)] = fiber_part
    base = LieAlgebra(name or f"{total.name}/fiber", splitting.base_labels, table)
    module = Representation(f"fiber({total.name})", base, module_space, action)
    return Cocycle2(base, module, values)


def _is_cone_part(label: str) -> bool:
    _, a = split_label(label)
    try:
        cone_parts(a)
    except ValueError:
        return False
    return a[0] in "LI"


def _lifted_current(u: str) -> Vec:
    """φ⊗x ↦ φ⊗I(x)."""
    phi, x = split_label(u)
    return Vec.basis(tensor_label(phi, I(x)))


def current_splitting(
    algebra: CurrentAlgebra,
    g: LieAlgebra,
    fiber_filter: Optional[Callable[[str], bool]] = None,
) -> ExtensionSplitting:
    """
    Splitting of CA or SA of an extension of C𝔤 over the current algebra
    A⁰(S)⊗𝔤. CA: φ⊗x ↦ [φ⊗I(x)], fiber = the remaining representatives.
    SA: φ⊗x ↦ d̃(φ⊗I(x)), fiber = closed degree-0 elements of S⊗(non-cone part).
    """
    functions = algebra.model.space.in_degree(0)
    currents = [tensor_label(phi, x) for phi in functions for x in g.basis]
    total = algebra.total
    if algebra.functor is Functor.CA:
        keep = fiber_filter or (lambda label: not _is_cone_part(label))
        section = {u: algebra.project(_lifted_current(u)) for u in currents}
        fiber_labels = tuple(l for l in algebra.labels if keep(l))
        fiber = {m: Vec.basis(m) for m in fiber_labels}
        return ExtensionSplitting(algebra.labels, tuple(currents), section, fiber_labels, fiber)
    section = {u: algebra.project(total.d(_lifted_current(u))) for u in currents}
    zero = degree_space(total, 0)
    module_labels = [l for l in zero.labels if not _is_cone_part(l)]
    if fiber_filter is not None:
        module_labels = [l for l in module_labels if fiber_filter(l)]
    source = GradedSpace(tuple((l, 0) for l in module_labels))
    target = degree_space(total, 1)
    columns = {l: total.differential.column(l) for l in module_labels}
    restricted = GradedMap(source, target, 1, columns)
    closed = kernel(restricted)
    fiber = {m: algebra.project(closed.lift(Vec.basis(m))) for m in closed.labels}
    return ExtensionSplitting(algebra.labels, tuple(currents), section, closed.labels, fiber)


def current_extension_cocycle(
    algebra: CurrentAlgebra,
    g: LieAlgebra,
    fiber_filter: Optional[Callable[[str], bool]] = None,
) -> tuple[Cocycle2, ExtensionSplitting]:
    """Cocycle of CA/SA of an extension of C𝔤, over the current algebra A⁰(S)⊗𝔤."""
    splitting = current_splitting(algebra, g, fiber_filter)
    sigma = extract_cocycle(algebra.as_lie(), splitting, f"{algebra.model.name}⊗{g.name}")
    return sigma, splitting


def normalize(
    algebra: CurrentAlgebra, splitting: ExtensionSplitting, ambient: Mapping[str, Fraction]
) -> Vec:
    """Fiber coordinates of an ambient element of S⊗(module) through the canonical projection."""
    if algebra.functor is Functor.SA and not algebra.basis.contains(ambient):
        raise InternalConsistencyError("value is not closed")
    projected = algebra.project(ambient)
    base_part, fiber_part = splitting.decompose(projected)
    if base_part:
        raise InternalConsistencyError(f"value leaves the fiber: {base_part.to_json()}")
    return fiber_part
