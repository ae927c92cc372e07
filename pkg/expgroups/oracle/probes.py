from typing import Sequence

from expgroups.element.element import Composite, Element
from expgroups.freeword.operations import free_conjugacy
from expgroups.group_ops.evaluation import evaluate_hom
from expgroups.models.enums import SeparationVerdict
from expgroups.models.models import ProbeReport
from expgroups.rings.ring_protocol import RingContract
from expgroups.utilities.errors import CapabilityError


def max_exponent_degree(element: Element, ring: RingContract) -> int:
    if not isinstance(element, Composite):
        return 0
    degrees: list[int] = [ring.max_degree(factor.exponent) for factor in element.factors]
    degrees += [max_exponent_degree(factor.root.body, ring) for factor in element.factors]
    degrees += [max_exponent_degree(separator, ring) for separator in element.separators]
    return max(degrees)


def default_points(ring: RingContract, *elements: Element) -> list[int]:
    """`0, 1, ..., d+1` where `d` is the largest exponent degree in the elements."""

    degree: int = max((max_exponent_degree(element, ring) for element in elements), default=0)
    return list(range(degree + 2))


def separation_probe(
    left: Element,
    right: Element,
    ring: RingContract,
    points: Sequence[int] | None = None,
) -> ProbeReport:
    """
    Compares the free-group images of two elements at integer points.

    The probe is one-sided: a point where the images differ proves the elements distinct, while agreement at every
    sampled point proves nothing.

    Args:
        - `left` (Element): First element.
        - `right` (Element): Second element.
        - `ring` (RingContract): The exponent ring.
        - `points` (Sequence[int] | None): Points to sample; by default `0, ..., d+1` for the largest exponent
          degree `d`.

    Returns:
        ProbeReport: `distinct` with the separating point, or `indistinguishable-at-sample`.

    Raises:
        - `CapabilityError`: If the ring cannot evaluate at integers.
    """

    if not ring.supports_evaluation:
        raise CapabilityError(f"Ring {ring.name!r} has no evaluation at integer points")
    sample: list[int] = list(points) if points is not None else default_points(ring, left, right)
    for point in sample:
        if evaluate_hom(left, point, ring) != evaluate_hom(right, point, ring):
            return ProbeReport(
                verdict=SeparationVerdict.DISTINCT, points=sample, separating_point=point
            )
    return ProbeReport(verdict=SeparationVerdict.INDISTINGUISHABLE_AT_SAMPLE, points=sample)


def conjugacy_separated(
    left: Element, right: Element, ring: RingContract, points: Sequence[int]
) -> bool:
    """True when at some point the free-group images are not conjugate, which proves the elements non-conjugate."""

    return any(
        free_conjugacy(evaluate_hom(left, point, ring), evaluate_hom(right, point, ring))
        is None
        for point in points
    )
