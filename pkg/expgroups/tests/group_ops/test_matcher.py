from typing import Callable

from expgroups.api import ExpGroup
from expgroups.element import Element, reduced_form_of, shifted_form

RANDOM_CASES: int = 300
DEEP_CASES: int = 150


def test_matcher_accepts_shifted_forms(group: ExpGroup, draw: Callable[[], Element]) -> None:
    for index in range(RANDOM_CASES):
        g = draw()
        size = reduced_form_of(g).syllable_count
        root_shifts = [(index + 2 * position) % 5 - 2 for position in range(size)]
        exponent_shifts = [(3 * index + position) % 3 - 1 for position in range(size)]
        shifted = shifted_form(group.rewriter, g, root_shifts, exponent_shifts)
        assert group.matcher_equals(reduced_form_of(g), shifted)
        assert group.matcher_equals(shifted, reduced_form_of(g))


def test_matcher_agrees_with_equality(
    group: ExpGroup, draw_deep: Callable[[], Element]
) -> None:
    for _ in range(DEEP_CASES):
        g, h = draw_deep(), draw_deep()
        assert group.matcher_equals(reduced_form_of(g), reduced_form_of(h)) == group.equals(g, h)


def test_matcher_rejects_changed_exponent(
    group: ExpGroup, parse: Callable[[str], Element]
) -> None:
    left = reduced_form_of(parse("a^(t)*b"))
    assert not group.matcher_equals(left, reduced_form_of(parse("a^(2*t)*b")))
    assert not group.matcher_equals(left, reduced_form_of(parse("b^(t)*b")))
    assert not group.matcher_equals(left, reduced_form_of(parse("a*b")))


def test_matcher_on_example_shift(group: ExpGroup, parse: Callable[[str], Element]) -> None:
    g = parse("a^(t)*b")
    assert group.matcher_equals(
        reduced_form_of(g), shifted_form(group.rewriter, g, [1], [-2])
    )
