from typing import Callable

import pytest

from expgroups.api import ExpGroup
from expgroups.element import IDENTITY, Element


@pytest.mark.parametrize(
    "text",
    [
        "1",
        "a",
        "a^-1*b^3",
        "a^(t)",
        "b*a^(2*t)",
        "a^(t^2-t)*b",
        "a^3*a^(t^2-t)*b",
        "b^-1*a^(-t)",
        "a^(t)*b^(t)*a^(t)",
    ],
)
def test_canonical_text_is_stable(group: ExpGroup, parse: Callable[[str], Element], text: str) -> None:
    assert group.format(parse(text)) == text


def test_identity_prints_as_one(group: ExpGroup) -> None:
    assert group.format(IDENTITY) == "1"


def test_compound_root_is_parenthesized(group: ExpGroup, parse: Callable[[str], Element], poly) -> None:
    g = group.power(parse("a^(t)*b"), poly("t"))
    assert group.format(g) == "(a^(t)*b)^(t)"
    assert group.level(g) == 2


def test_collected_exponents(group: ExpGroup, parse: Callable[[str], Element]) -> None:
    assert group.format(parse("a^(t)*a^(t)")) == "a^(2*t)"
    assert group.format(group.invert(parse("a^(t)*b"))) == "b^-1*a^(-t)"


def test_integer_ring_prints_plain_words(integer_group: ExpGroup) -> None:
    g = integer_group.parse("a^(3)*a^-1*b")
    assert integer_group.format(g) == "a^2*b"
