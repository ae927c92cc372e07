from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from expgroups.element.element import (
    IDENTITY,
    Base,
    Composite,
    Element,
    PowerFactor,
)

if TYPE_CHECKING:
    from expgroups.element.rewriting import ElementRewriter


@dataclass(frozen=True, slots=True)
class ReducedForm:
    """
    A reduced form `u_1 p_1 ... u_m p_m u_{m+1}` whose parts need not be canonical.

    An element has many reduced forms: integer shifts of the exponents can be traded against root powers in the
    neighbouring separators. Canonical elements give one particular form; `shifted_form` produces the others.

    Attributes:
        - `level` (int): The level of the element.
        - `separators` (tuple[Element, ...]): `u_1, ..., u_{m+1}`, each a canonical element.
        - `factors` (tuple[PowerFactor, ...]): `p_1, ..., p_m`; exponents may carry integer parts.
    """

    level: int
    separators: tuple[Element, ...]
    factors: tuple[PowerFactor, ...] = ()

    @property
    def syllable_count(self) -> int:
        return len(self.factors)


def reduced_form_of(element: Element) -> ReducedForm:
    if isinstance(element, Base):
        return ReducedForm(0, (element,))
    return ReducedForm(element.level, element.separators, element.factors)


def assemble_form(rewriter: "ElementRewriter", form: ReducedForm) -> Element:
    return rewriter.assemble(form.separators, form.factors)


def shifted_form(
    rewriter: "ElementRewriter",
    element: Element,
    root_shifts: Sequence[int],
    exponent_shifts: Sequence[int],
) -> ReducedForm:
    """
    Another reduced form of `element`, obtained by moving root powers across its power factors.

    With canonical parts `w_s`, roots `v_s` and exponents `b_s` the new parts are
    `u_1 = w_1 v_1^(-t_1-n_1)`, `u_s = v_{s-1}^(t_{s-1}) w_s v_s^(-t_s-n_s)`, `u_{m+1} = v_m^(t_m) w_{m+1}` and
    exponents `a_s = b_s + n_s`. Powers of one root commute, so the product is unchanged.

    Args:
        - `rewriter` (ElementRewriter): The rewriter used to build the new separators.
        - `element` (Element): A canonical element.
        - `root_shifts` (Sequence[int]): The `t_s`, one per power factor.
        - `exponent_shifts` (Sequence[int]): The `n_s`, one per power factor.

    Raises:
        - `ValueError`: If the shift sequences do not have one entry per power factor.

    Example:
        ```Python
        form = shifted_form(rewriter, a_t_b, [1], [2])  # u_1 = a^-3, p_1 = a^(t+2), u_2 = a*b
        assert assemble_form(rewriter, form) == a_t_b
        ```
    """

    form: ReducedForm = reduced_form_of(element)
    size: int = form.syllable_count
    if len(root_shifts) != size or len(exponent_shifts) != size:
        raise ValueError(
            f"Expected {size} shifts per sequence, got {len(root_shifts)} and {len(exponent_shifts)}"
        )
    if not size:
        return form

    bodies: list[Element] = [factor.root.body for factor in form.factors]
    separators: list[Element] = []
    for position in range(size + 1):
        separator: Element = form.separators[position]
        if position > 0:
            separator = rewriter.multiply(
                rewriter.power_int(bodies[position - 1], root_shifts[position - 1]),
                separator,
            )
        if position < size:
            separator = rewriter.multiply(
                separator,
                rewriter.power_int(
                    bodies[position],
                    -root_shifts[position] - exponent_shifts[position],
                ),
            )
        separators.append(separator)

    factors: tuple[PowerFactor, ...] = tuple(
        PowerFactor(factor.root, factor.exponent + shift)
        for factor, shift in zip(form.factors, exponent_shifts)
    )
    return ReducedForm(form.level, tuple(separators), factors)


def semicanonical_form(rewriter: "ElementRewriter", form: ReducedForm) -> ReducedForm:
    """Moves the integer part of every exponent into the separator on its left, leaving exponents in the transversal."""

    separators: list[Element] = list(form.separators)
    factors: list[PowerFactor] = []
    for position, factor in enumerate(form.factors):
        whole, remainder = rewriter.ring.split_integer(factor.exponent)
        if whole:
            separators[position] = rewriter.multiply(
                separators[position], rewriter.power_int(factor.root.body, whole)
            )
        factors.append(PowerFactor(factor.root, remainder))
    return ReducedForm(form.level, tuple(separators), tuple(factors))


def audit_reduced_form(rewriter: "ElementRewriter", element: Element) -> list[str]:
    """
    Checks every side condition of the canonical reduced form, recursively through separators and roots.

    Returns:
        list[str]: One message per violation; empty when the element is clean.
    """

    problems: list[str] = []
    _audit(rewriter, element, "g", problems)
    return problems


def _audit(
    rewriter: "ElementRewriter", element: Element, path: str, problems: list[str]
) -> None:
    if isinstance(element, Base):
        return
    if not isinstance(element, Composite):
        problems.append(f"{path}: not an element ({type(element).__name__})")
        return

    size: int = len(element.factors)
    if size < 1:
        problems.append(f"{path}: composite without power factors")
        return
    if len(element.separators) != size + 1:
        problems.append(f"{path}: {len(element.separators)} separators for {size} factors")
        return

    for position, separator in enumerate(element.separators):
        if separator.level >= element.level:
            problems.append(
                f"{path}.u{position + 1}: level {separator.level} not below {element.level}"
            )
        _audit(rewriter, separator, f"{path}.u{position + 1}", problems)

    for position, factor in enumerate(element.factors):
        label: str = f"{path}.p{position + 1}"
        body: Element = factor.root.body
        if body.level != element.level - 1:
            problems.append(f"{label}: root level {body.level}, expected {element.level - 1}")
        whole, _ = rewriter.ring.split_integer(factor.exponent)
        if rewriter.ring.is_integer(factor.exponent):
            problems.append(f"{label}: integer exponent")
        elif whole:
            problems.append(f"{label}: exponent carries integer part {whole}")
        if body == IDENTITY:
            problems.append(f"{label}: trivial root")
            continue
        _, canonical_root, root_exponent = rewriter.roots.decompose(body)
        if canonical_root != factor.root or root_exponent != rewriter.ring.one():
            problems.append(f"{label}: root is not canonical")
        _audit(rewriter, body, f"{label}.root", problems)

        separator: Element = element.separators[position + 1]
        shift, representative = rewriter.left_coset_representative(separator, body)
        if shift or representative != separator:
            problems.append(f"{path}.u{position + 2}: not the least element of its coset")
        if position + 1 < size and element.factors[position + 1].root == factor.root:
            if rewriter.root_power_index(separator, body) is not None:
                problems.append(
                    f"{path}.u{position + 2}: power of the shared root of its neighbours"
                )
