"""Exact rational sparse linear algebra over graded spaces."""

from src.linalg.echelon import (
    Echelon,
    SpanSolver,
    SubquotientBasis,
    image,
    kernel,
    nullspace,
    quotient,
    rank,
    rref,
    solve,
    span,
)
from src.linalg.graded import GradedMap, GradedSpace, tensor, tensor_label
from src.linalg.vector import Vec, format_scalar, to_scalar

__all__ = [
    "Echelon",
    "GradedMap",
    "GradedSpace",
    "SpanSolver",
    "SubquotientBasis",
    "Vec",
    "format_scalar",
    "image",
    "kernel",
    "nullspace",
    "quotient",
    "rank",
    "rref",
    "solve",
    "span",
    "tensor",
    "tensor_label",
    "to_scalar",
]
