from typing import Callable

from expgroups.element.element import IDENTITY, Element
from expgroups.group_ops.operations import GroupOperations
from expgroups.models.enums import AuditStatus, AxiomName
from expgroups.models.models import AxiomAuditReport, AxiomCheck
from expgroups.rings.ring_element import RingElement


def axiom_audit(
    operations: GroupOperations,
    g: Element,
    h: Element,
    alpha: RingElement,
    beta: RingElement,
) -> AxiomAuditReport:
    """
    Checks every exponential-group axiom family on one tuple, comparing both sides with `equals`.

    The commuting-product axiom is skipped when `g` and `h` do not commute.

    Args:
        - `operations` (GroupOperations): The operations under audit.
        - `g` (Element): First element.
        - `h` (Element): Second element, the conjugator of the conjugation axiom.
        - `alpha` (RingElement): First exponent.
        - `beta` (RingElement): Second exponent.

    Returns:
        AxiomAuditReport: One check per axiom.
    """

    rewriter = operations.rewriter
    power = operations.power
    multiply = rewriter.multiply

    def conjugated(element: Element) -> Element:
        return rewriter.conjugate(element, h)

    laws: list[tuple[AxiomName, Callable[[], tuple[Element, Element]]]] = [
        (AxiomName.UNIT, lambda: (power(g, rewriter.ring.one()), g)),
        (AxiomName.ZERO, lambda: (power(g, rewriter.ring.zero()), IDENTITY)),
        (
            AxiomName.ADDITIVE,
            lambda: (power(g, alpha + beta), multiply(power(g, alpha), power(g, beta))),
        ),
        (
            AxiomName.MULTIPLICATIVE,
            lambda: (power(g, alpha * beta), power(power(g, alpha), beta)),
        ),
        (
            AxiomName.CONJUGATION,
            lambda: (power(conjugated(g), alpha), conjugated(power(g, alpha))),
        ),
    ]

    checks: list[AxiomCheck] = [_check(operations, name, law) for name, law in laws]
    if operations.commutes(g, h):
        checks.append(
            _check(
                operations,
                AxiomName.COMMUTING_PRODUCT,
                lambda: (
                    power(multiply(g, h), alpha),
                    multiply(power(g, alpha), power(h, alpha)),
                ),
            )
        )
    else:
        checks.append(
            AxiomCheck(
                axiom=AxiomName.COMMUTING_PRODUCT,
                status=AuditStatus.SKIPPED,
                detail="g and h do not commute",
            )
        )
    return AxiomAuditReport(checks=checks)


def _check(
    operations: GroupOperations,
    axiom: AxiomName,
    law: Callable[[], tuple[Element, Element]],
) -> AxiomCheck:
    left, right = law()
    if operations.equals(left, right):
        return AxiomCheck(axiom=axiom, status=AuditStatus.PASS)
    return AxiomCheck(
        axiom=axiom, status=AuditStatus.FAIL, detail=f"{left!r} != {right!r}"
    )
