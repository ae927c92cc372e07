from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True, slots=True)
class RingElement:
    """
    An exponent from the ring: a sparse integer polynomial in one indeterminate.

    `terms` holds `(degree, coefficient)` pairs sorted by descending degree with no zero coefficients, so the zero
    element is the empty tuple and structural equality is ring equality. Coefficients are Python integers and never
    overflow. The integer ring reuses the same representation restricted to degree 0.

    Attributes:
        - `terms` (tuple[tuple[int, int], ...]): Canonical `(degree, coefficient)` pairs.

    Example:
        ```Python
        a = RingElement.from_mapping({2: 3, 0: 1})  # 3t^2 + 1
        b = RingElement.from_int(-1)
        assert (a + b).terms == ((2, 3),)
        ```
    """

    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_int(cls, value: int) -> "RingElement":
        return cls(((0, value),)) if value else cls()

    @classmethod
    def from_mapping(cls, coefficients: Mapping[int, int]) -> "RingElement":
        for degree in coefficients:
            if degree < 0:
                raise ValueError(f"Negative degree {degree} in ring element")
        return cls(
            tuple(
                (degree, coefficient)
                for degree, coefficient in sorted(coefficients.items(), reverse=True)
                if coefficient
            )
        )

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "RingElement":
        """Sums possibly repeated `(degree, coefficient)` pairs."""

        accumulator: dict[int, int] = {}
        for degree, coefficient in pairs:
            accumulator[degree] = accumulator.get(degree, 0) + coefficient
        return cls.from_mapping(accumulator)

    def as_mapping(self) -> dict[int, int]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_integer(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    @property
    def constant_term(self) -> int:
        if self.terms and self.terms[-1][0] == 0:
            return self.terms[-1][1]
        return 0

    @property
    def degree(self) -> int:
        """Degree of the leading term; the zero element reports -1."""

        return self.terms[0][0] if self.terms else -1

    def __add__(self, other: "RingElement | int") -> "RingElement":
        other = _coerce(other)
        return RingElement.from_pairs(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement(tuple((degree, -coefficient) for degree, coefficient in self.terms))

    def __sub__(self, other: "RingElement | int") -> "RingElement":
        return self + (-_coerce(other))

    def __rsub__(self, other: "RingElement | int") -> "RingElement":
        return _coerce(other) - self

    def __mul__(self, other: "RingElement | int") -> "RingElement":
        other = _coerce(other)
        return RingElement.from_pairs(
            (left_degree + right_degree, left * right)
            for left_degree, left in self.terms
            for right_degree, right in other.terms
        )

    __rmul__ = __mul__

    def sort_key(self) -> tuple[tuple[int, int, int], ...]:
        """
        Total order used for deterministic tie-breaks.

        Terms compare by descending degree, and at equal degree a positive coefficient sorts before a negative
        one, then by magnitude.
        """

        return tuple(
            (-degree, 0 if coefficient > 0 else 1, abs(coefficient))
            for degree, coefficient in self.terms
        )


def _coerce(value: "RingElement | int") -> RingElement:
    if isinstance(value, RingElement):
        return value
    if isinstance(value, int):
        return RingElement.from_int(value)
    raise TypeError(f"Cannot combine RingElement with {type(value).__name__}")
