from typing import Callable

import pytest

from expgroups.api import ExpGroup
from expgroups.element import IDENTITY, Base, Element
from expgroups.models.enums import ElementKind
from expgroups.utilities.errors import IdentityInputError

RANDOM_CASES: int = 200


@pytest.mark.parametrize(
    "text, kind",
    [
        ("b*a*b^-1", ElementKind.WORD),
        ("b^-1*a^(t)*b", ElementKind.ELLIPTIC),
        ("a^(t)*b", ElementKind.HYPERBOLIC),
        ("a^(-t)*b*a^(t)", ElementKind.WORD),
        ("a^(t)*b^(t)*a^(-t)", ElementKind.ELLIPTIC),
    ],
)
def test_cyclic_word_kind(group: ExpGroup, text: str, kind: ElementKind) -> None:
    assert group.rewriter.roots.cyclic_word(group.parse(text)).kind == kind


@pytest.mark.parametrize(
    "text, conjugator, core",
    [
        ("a^(-t)*b*a^(t)", "a^(t)", "b"),
        ("a^(t)*b", "1", "a^(t)*b"),
        ("b^-1*a^(t)*b*a^(t)*b*b", "b", "a^(t)*b*a^(t)*b"),
        ("b*a*b^-1", "b^-1", "a"),
    ],
)
def test_cyclic_reduce(
    group: ExpGroup, parse: Callable[[str], Element], text: str, conjugator: str, core: str
) -> None:
    assert group.cyclic_reduce(parse(text)) == (parse(conjugator), parse(core))


def test_cyclic_reduce_reassembles(group: ExpGroup, draw: Callable[[], Element]) -> None:
    roots = group.rewriter.roots
    for _ in range(RANDOM_CASES):
        g = draw()
        conjugator, core = group.cyclic_reduce(g)
        assert group.rewriter.conjugate(core, conjugator) == g
        if isinstance(core, Base):
            assert roots.is_cyclically_reduced(core)


def test_double_coset_representative(group: ExpGroup, parse: Callable[[str], Element]) -> None:
    roots = group.rewriter.roots
    a = parse("a")
    assert roots.double_coset_representative(a, parse("a^2*b*a^-1"), a) == (2, parse("b"), -1)
    assert roots.double_coset_representative(parse("a^(t)*b"), a, a) == (0, a, 0)


def test_decompose_reassembles(group: ExpGroup, draw_nontrivial: Callable[[], Element]) -> None:
    rewriter = group.rewriter
    for _ in range(RANDOM_CASES):
        g = draw_nontrivial()
        conjugator, root, exponent = rewriter.roots.decompose(g)
        assert rewriter.conjugate(rewriter.power_factor_element(root, exponent), conjugator) == g
        assert rewriter.roots.decompose(root.body)[1:] == (root, group.ring.one())


def test_conjugates_share_the_canonical_root(
    group: ExpGroup, draw_nontrivial: Callable[[], Element], draw: Callable[[], Element]
) -> None:
    rewriter = group.rewriter
    for _ in range(RANDOM_CASES):
        g, w = draw_nontrivial(), draw()
        _, root, exponent = rewriter.roots.decompose(g)
        _, moved_root, moved_exponent = rewriter.roots.decompose(rewriter.conjugate(g, w))
        assert (moved_root, moved_exponent) == (root, exponent)


def test_decompose_rejects_identity(group: ExpGroup) -> None:
    with pytest.raises(IdentityInputError):
        group.rewriter.roots.decompose(IDENTITY)
