from typing import Callable

import pytest
from hypothesis import given, strategies as st

from expgroups.api import ExpGroup
from expgroups.element import (
    IDENTITY,
    Composite,
    Element,
    RawGenerator,
    RawPower,
    RawProduct,
    is_identity,
    syllable_length,
)
from expgroups.freeword import Word
from expgroups.freeword.word import Letter

RANDOM_CASES: int = 300
DEEP_CASES: int = 150
GENERATOR_NAMES: tuple[str, str] = ("a", "b")

letters = st.lists(
    st.tuples(st.integers(min_value=0, max_value=1), st.sampled_from([1, -1])), max_size=10
)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("a*a^-1", "1"),
        ("a^(t)*a^(t)", "a^(2*t)"),
        ("b*a^(t+1)*a^-1", "b*a^(t)"),
        ("a^(t)*b*b^-1*a^(-t)", "1"),
        ("(a^(t)*b)*(b^-1*a^(t))", "a^(2*t)"),
        ("a*a", "a^2"),
        ("a^(t+1)", "a*a^(t)"),
        ("b^-1*a^(t)*b", "b^-1*a^(t)*b"),
    ],
)
def test_normalize(group: ExpGroup, text: str, expected: str) -> None:
    assert group.format(group.parse(text)) == expected


def test_normalize_tree(group: ExpGroup, poly: Callable) -> None:
    a_t = RawPower(RawGenerator(0), poly("t"))
    assert group.normalize(RawProduct((a_t, a_t))) == group.parse("a^(2*t)")


def test_invert(group: ExpGroup, parse: Callable[[str], Element]) -> None:
    assert group.format(group.invert(parse("a^(t)*b"))) == "b^-1*a^(-t)"
    assert group.invert(IDENTITY) == IDENTITY


def test_identity_is_neutral(group: ExpGroup, parse: Callable[[str], Element]) -> None:
    g = parse("a^(t)*b*a^(t^2)")
    assert group.multiply(g, IDENTITY) == g
    assert group.multiply(IDENTITY, g) == g


@pytest.mark.parametrize(
    "text, level",
    [("a", 0), ("1", 0), ("a^(t)", 1), ("b*a^(t)*b", 1), ("(a^(t)*b)^(t)", 2)],
)
def test_level(group: ExpGroup, text: str, level: int) -> None:
    assert group.level(group.parse(text)) == level


@pytest.mark.parametrize(
    "text, length",
    [("b", 1), ("a^3*b^-2", 5), ("a^(t)", 1), ("a^(t)*b*a^(t)*b", 2), ("a^(t)*b^(t)", 2)],
)
def test_syllable_length(group: ExpGroup, text: str, length: int) -> None:
    assert group.syllable_length(group.parse(text)) == length


def test_canonical_form_fields(group: ExpGroup, parse: Callable[[str], Element]) -> None:
    g = parse("b*a^(t+2)*a*b")
    assert isinstance(g, Composite)
    assert g.level == 1
    assert len(g.factors) == 1
    whole, _ = group.ring.split_integer(g.factors[0].exponent)
    assert whole == 0
    assert group.format(g) == "b*a^3*a^(t)*b"


def test_cancellation_cascades_across_joints(
    group: ExpGroup, parse: Callable[[str], Element]
) -> None:
    g = parse("a^(t)*b^(t)*a^(t)")
    assert is_identity(group.multiply(g, parse("a^(-t)*b^(-t)*a^(-t)")))
    assert group.format(group.multiply(g, parse("a^(-t)*b"))) == "a^(t)*b*b^(t)"


def test_integer_ring_collapses_to_words(integer_group: ExpGroup) -> None:
    g = integer_group.parse("a^(3)*b^(2)*b^(-2)")
    assert integer_group.format(g) == "a^3"
    assert integer_group.level(g) == 0


def test_group_laws_on_random_elements(
    group: ExpGroup, draw: Callable[[], Element]
) -> None:
    for _ in range(RANDOM_CASES):
        g, h, k = draw(), draw(), draw()
        assert group.multiply(group.multiply(g, h), k) == group.multiply(g, group.multiply(h, k))
        assert is_identity(group.multiply(g, group.invert(g)))
        assert group.invert(group.invert(g)) == g
        assert group.multiply(g, h).level <= max(g.level, h.level)


def test_normalize_is_idempotent_through_text(
    group: ExpGroup, draw: Callable[[], Element]
) -> None:
    for _ in range(RANDOM_CASES):
        g = draw()
        assert group.parse(group.format(g)) == g


def test_syllable_length_of_square(group: ExpGroup, parse: Callable[[str], Element]) -> None:
    z = parse("a^(t)*b")
    assert syllable_length(group.power(z, 2)) == 2 * syllable_length(z)


def test_group_laws_at_level_two(group: ExpGroup, draw_deep: Callable[[], Element]) -> None:
    for _ in range(DEEP_CASES):
        g, h, k = draw_deep(), draw_deep(), draw_deep()
        assert group.multiply(group.multiply(g, h), k) == group.multiply(g, group.multiply(h, k))
        assert is_identity(group.multiply(group.invert(g), g))
        assert group.parse(group.format(g)) == g


def _letter_text(letters: list[Letter]) -> str:
    if not letters:
        return "1"
    return "*".join(
        GENERATOR_NAMES[index] + ("" if sign == 1 else "^-1") for index, sign in letters
    )


@given(letters, letters)
def test_words_embed_injectively(left: list[Letter], right: list[Letter]) -> None:
    group = ExpGroup(list(GENERATOR_NAMES))
    g, h = group.parse(_letter_text(left)), group.parse(_letter_text(right))
    u, v = Word.from_letters(left), Word.from_letters(right)

    assert group.equals(g, h) == (u == v)
    assert g.level == 0
    assert group.evaluate(g, 0) == u


def test_huge_exponents_stay_exact(group: ExpGroup, parse: Callable[[str], Element]) -> None:
    huge = 2**128
    g = parse(f"a^({huge}*t)*b")
    assert group.format(g) == f"a^({huge}*t)*b"
    assert group.equals(parse(f"a^({huge}*t+1)*a^({-huge}*t)"), parse("a"))
    assert group.evaluate(parse(f"a^({huge}*t)"), 1) == Word.generator(0, huge)
    assert group.parse(group.format(group.power(g, 3))) == group.power(g, 3)
