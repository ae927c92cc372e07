from dataclasses import dataclass
from typing import Union

from expgroups.element.element import Base, Composite, Element
from expgroups.freeword.word import Word
from expgroups.rings.ring_element import RingElement


@dataclass(frozen=True, slots=True)
class RawIdentity:
    pass


@dataclass(frozen=True, slots=True)
class RawGenerator:
    index: int
    sign: int = 1


@dataclass(frozen=True, slots=True)
class RawProduct:
    children: tuple["RawExpr", ...]


@dataclass(frozen=True, slots=True)
class RawInverse:
    child: "RawExpr"


@dataclass(frozen=True, slots=True)
class RawPower:
    child: "RawExpr"
    exponent: RingElement


RawExpr = Union[RawIdentity, RawGenerator, RawProduct, RawInverse, RawPower]
"""An unnormalized expression tree, as produced by the parser and by obfuscation."""


def raw_word(word: Word) -> RawExpr:
    children: list[RawExpr] = []
    for index, exponent in word.syllables:
        if exponent == 1:
            children.append(RawGenerator(index))
        elif exponent == -1:
            children.append(RawGenerator(index, -1))
        else:
            children.append(RawPower(RawGenerator(index), RingElement.from_int(exponent)))
    if not children:
        return RawIdentity()
    return children[0] if len(children) == 1 else RawProduct(tuple(children))


def to_raw(element: Element) -> RawExpr:
    """The expression tree of an element, part by part."""

    if isinstance(element, Base):
        return raw_word(element.word)

    assert isinstance(element, Composite)
    children: list[RawExpr] = []
    for part in element.parts:
        if isinstance(part, (Base, Composite)):
            if not (isinstance(part, Base) and part.word.is_identity):
                children.append(to_raw(part))
        else:
            children.append(RawPower(to_raw(part.root.body), part.exponent))
    return children[0] if len(children) == 1 else RawProduct(tuple(children))


def raw_size(expression: RawExpr) -> int:
    """Number of nodes in the tree."""

    if isinstance(expression, RawProduct):
        return 1 + sum(raw_size(child) for child in expression.children)
    if isinstance(expression, (RawInverse, RawPower)):
        return 1 + raw_size(expression.child)
    return 1
