from dataclasses import dataclass
from typing import Union

from expgroups.freeword.word import IDENTITY_WORD, Word
from expgroups.rings.ring_element import RingElement


@dataclass(frozen=True, slots=True)
class Base:
    """A level-0 element: an ordinary reduced word."""

    word: Word

    @property
    def level(self) -> int:
        return 0


@dataclass(frozen=True, slots=True)
class RootElement:
    """
    A canonical primitive root: the chosen representative of its conjugacy class, cyclically reduced at its level
    and oriented so that it is the smaller of itself and its inverse. Equal roots are structurally equal.

    Attributes:
        - `body` (Element): The root as an element of its own level.
    """

    body: "Element"

    @property
    def level(self) -> int:
        return self.body.level


@dataclass(frozen=True, slots=True)
class PowerFactor:
    """`root^exponent` with a non-integer exponent, living one level above the root."""

    root: RootElement
    exponent: RingElement


@dataclass(frozen=True, slots=True)
class Composite:
    """
    A reduced form `u_1 p_1 u_2 ... u_m p_m u_{m+1}` of level `level >= 1`.

    Separators `u_i` have level below `level`, every factor root has level `level - 1`, and a separator between two
    factors with the same root is not an integer power of that root. Elements built by the rewriter are canonical:
    factor exponents have zero integer part, every `u_i` with `i >= 2` is the least element of its left coset by
    the root on its left, and `u_1` takes whatever is left over.

    Attributes:
        - `level` (int): The level of the element.
        - `separators` (tuple[Element, ...]): `u_1, ..., u_{m+1}`.
        - `factors` (tuple[PowerFactor, ...]): `p_1, ..., p_m`, with `m >= 1`.
    """

    level: int
    separators: tuple["Element", ...]
    factors: tuple[PowerFactor, ...]

    @property
    def parts(self) -> tuple["Element | PowerFactor", ...]:
        interleaved: list[Element | PowerFactor] = [self.separators[0]]
        for factor, separator in zip(self.factors, self.separators[1:]):
            interleaved.extend((factor, separator))
        return tuple(interleaved)


Element = Union[Base, Composite]

IDENTITY: Base = Base(IDENTITY_WORD)


def is_identity(element: Element) -> bool:
    return isinstance(element, Base) and element.word.is_identity


def syllable_length(element: Element) -> int:
    """Letter length at level 0, the number of power factors otherwise."""

    if isinstance(element, Base):
        return element.word.length
    return len(element.factors)


def letter_count(element: Element) -> int:
    """Letters of every word inside the element, roots included."""

    if isinstance(element, Base):
        return element.word.length
    return sum(letter_count(separator) for separator in element.separators) + sum(
        letter_count(factor.root.body) for factor in element.factors
    )


def measure_at(element: Element, level: int) -> int:
    """Letter length when `level` is 0, otherwise the factor count if the element lives at `level`, else 0."""

    if level == 0:
        return letter_count(element)
    return syllable_length(element) if element.level == level else 0


def weight(element: Element) -> tuple[int, int, int]:
    """The order `(level, m, letter count)` that drives cyclic reduction and coset representatives."""

    return element.level, syllable_length(element), letter_count(element)


def structure_key(element: Element) -> tuple:
    if isinstance(element, Base):
        return 0, element.word.sort_key()
    items: list[tuple] = [structure_key(element.separators[0])]
    for factor, separator in zip(element.factors, element.separators[1:]):
        items.append((structure_key(factor.root.body), factor.exponent.sort_key()))
        items.append(structure_key(separator))
    return element.level, tuple(items)


def element_key(element: Element) -> tuple:
    """Total order on canonical elements: weight first, structure to break ties."""

    return weight(element) + (structure_key(element),)


def generator_indices(element: Element) -> set[int]:
    if isinstance(element, Base):
        return element.word.generator_indices()
    indices: set[int] = set()
    for separator in element.separators:
        indices |= generator_indices(separator)
    for factor in element.factors:
        indices |= generator_indices(factor.root.body)
    return indices
