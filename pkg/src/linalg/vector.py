"""
Sparse vectors and exact scalars.

A vector is a mapping from basis labels to nonzero Fractions. Zero
coefficients are never stored, so two vectors are equal exactly when
their dicts are equal.
"""

from fractions import Fraction
from typing import Iterable, Mapping, Union

ScalarLike = Union[int, str, Fraction]


def to_scalar(value: ScalarLike) -> Fraction:
    """Coerce an int, Fraction or "p/q" string into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as an exact scalar")


def format_scalar(value: Fraction) -> str:
    """Serialize as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))


class Vec(dict):
    """Sparse vector over labelled basis elements."""

    def __init__(self, data: Union[Mapping[str, ScalarLike], Iterable, None] = None):
        super().__init__()
        if data is None:
            return
        items = data.items() if isinstance(data, Mapping) else data
        for key, value in items:
            self._accumulate(key, to_scalar(value))

    def _accumulate(self, key: str, value: Fraction) -> None:
        if value == 0:
            return
        total = dict.get(self, key, Fraction(0)) + value
        if total == 0:
            del self[key]
        else:
            self[key] = total

    @classmethod
    def basis(cls, label: str, coefficient: ScalarLike = 1) -> "Vec":
        return cls({label: coefficient})

    def coefficient(self, label: str) -> Fraction:
        return dict.get(self, label, Fraction(0))

    def __add__(self, other: Mapping[str, Fraction]) -> "Vec":
        result = Vec(self)
        for key, value in other.items():
            result._accumulate(key, value)
        return result

    def __sub__(self, other: Mapping[str, Fraction]) -> "Vec":
        result = Vec(self)
        for key, value in other.items():
            result._accumulate(key, -value)
        return result

    def __neg__(self) -> "Vec":
        return Vec((key, -value) for key, value in self.items())

    def __mul__(self, scalar: ScalarLike) -> "Vec":
        factor = to_scalar(scalar)
        if factor == 0:
            return Vec()
        return Vec((key, factor * value) for key, value in self.items())

    __rmul__ = __mul__

    def add_scaled(self, other: Mapping[str, Fraction], factor: ScalarLike) -> "Vec":
        """Return self + factor * other."""
        factor = to_scalar(factor)
        result = Vec(self)
        if factor != 0:
            for key, value in other.items():
                result._accumulate(key, factor * value)
        return result

    def relabel(self, mapping: Mapping[str, str]) -> "Vec":
        return Vec((mapping[key], value) for key, value in self.items())

    def sorted_items(self) -> list[tuple[str, Fraction]]:
        return sorted(self.items())

    def to_json(self) -> dict[str, str]:
        return {key: format_scalar(value) for key, value in sorted(self.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, ScalarLike]) -> "Vec":
        return cls(data)

    def __hash__(self) -> int:  # type: ignore[override]
        return hash(tuple(sorted(self.items())))


def linear_combination(terms: Iterable[tuple[ScalarLike, Mapping[str, Fraction]]]) -> Vec:
    result = Vec()
    for factor, vec in terms:
        result = result.add_scaled(vec, factor)
    return result
