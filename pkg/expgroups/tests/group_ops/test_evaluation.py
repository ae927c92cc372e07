from typing import Callable

import pytest

from expgroups.api import ExpGroup
from expgroups.element import Element
from expgroups.freeword.operations import free_invert, free_multiply
from expgroups.group_ops import evaluate_hom
from expgroups.utilities.errors import CapabilityError

POINTS: list[int] = [-2, -1, 0, 1, 3]
RANDOM_CASES: int = 150


class _OpaqueRing:
    name: str = "opaque"
    supports_evaluation: bool = False


@pytest.mark.parametrize(
    "text, point, expected",
    [
        ("a^(t^2)*b*a^(-t)", 2, "a^4*b*a^-2"),
        ("(a^(t)*b)^(t+1)", 3, "a^3*b*a^3*b*a^3*b*a^3*b"),
        ("a^(t)*b", 0, "b"),
        ("a^(t)*a^(-t)", 5, "1"),
        ("b^-1*a^(t-1)*b", -1, "b^-1*a^-2*b"),
    ],
)
def test_evaluate_examples(
    group: ExpGroup, parse: Callable[[str], Element], text: str, point: int, expected: str
) -> None:
    assert group.format_word(group.evaluate(parse(text), point)) == expected


def test_evaluation_is_a_homomorphism(
    group: ExpGroup, draw_deep: Callable[[], Element]
) -> None:
    for _ in range(RANDOM_CASES):
        g, h = draw_deep(), draw_deep()
        for point in POINTS:
            assert group.evaluate(group.multiply(g, h), point) == free_multiply(
                group.evaluate(g, point), group.evaluate(h, point)
            )
            assert group.evaluate(group.invert(g), point) == free_invert(
                group.evaluate(g, point)
            )


def test_integer_ring_evaluation_is_the_identity_map(integer_group: ExpGroup) -> None:
    g = integer_group.parse("a^2*b^-1")
    assert integer_group.evaluate(g, 7) == g.word


def test_evaluation_needs_a_capable_ring(parse: Callable[[str], Element]) -> None:
    with pytest.raises(CapabilityError):
        evaluate_hom(parse("a^(t)"), 1, _OpaqueRing())
