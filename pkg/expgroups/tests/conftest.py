from typing import Callable

import pytest

from expgroups.api import ExpGroup
from expgroups.configs.configs import GenParams
from expgroups.element.element import Element
from expgroups.oracle.generator import RandomElementGenerator
from expgroups.rings.ring_element import RingElement


@pytest.fixture
def group() -> ExpGroup:
    return ExpGroup(["a", "b"])


@pytest.fixture
def integer_group() -> ExpGroup:
    return ExpGroup(["a", "b"], "z")


@pytest.fixture
def parse(group: ExpGroup) -> Callable[[str], Element]:
    return group.parse


@pytest.fixture
def poly(group: ExpGroup) -> Callable[[str], RingElement]:
    return group.exponent


@pytest.fixture
def small_params() -> GenParams:
    return GenParams(
        alphabet_size=2,
        max_level=1,
        max_syllables=2,
        max_degree=1,
        max_coefficient=2,
        seed=20240611,
    )


@pytest.fixture
def draw(group: ExpGroup, small_params: GenParams) -> Callable[[], Element]:
    """Random normalized elements of level at most 1 from a fixed seed."""

    generator = RandomElementGenerator(small_params, group.ring)
    return lambda: group.normalize(generator.expression())


@pytest.fixture
def draw_nontrivial(draw: Callable[[], Element], group: ExpGroup) -> Callable[[], Element]:
    def _draw() -> Element:
        while True:
            element: Element = draw()
            if not group.equals(element, group.parse("1")):
                return element

    return _draw


@pytest.fixture
def deep_params() -> GenParams:
    return GenParams(
        alphabet_size=2,
        max_level=2,
        max_syllables=2,
        max_degree=1,
        max_coefficient=2,
        seed=20240612,
    )


@pytest.fixture
def draw_deep(group: ExpGroup, deep_params: GenParams) -> Callable[[], Element]:
    """Random normalized elements of level at most 2 from a fixed seed."""

    generator = RandomElementGenerator(deep_params, group.ring)
    return lambda: group.normalize(generator.expression())


@pytest.fixture
def draw_deep_nontrivial(
    draw_deep: Callable[[], Element], group: ExpGroup
) -> Callable[[], Element]:
    def _draw() -> Element:
        while True:
            element: Element = draw_deep()
            if not group.equals(element, group.parse("1")):
                return element

    return _draw
