import logging

from expgroups.element.element import IDENTITY, Element
from expgroups.element.forms import ReducedForm
from expgroups.element.rewriting import ElementRewriter


class ReducedFormMatcher:
    """
    Decides whether two reduced forms describe the same element without multiplying them out.

    Two reduced forms `u_1 v_1^(a_1) ... u_{m+1}` and `w_1 v_1^(b_1) ... w_{m+1}` are equal exactly when they have
    the same length and roots, every `a_s - b_s` is an integer `n_s` and there are integers `t_s` with
    `u_1 = w_1 v_1^(-t_1-n_1)`, `u_s = v_{s-1}^(t_{s-1}) w_s v_s^(-t_s-n_s)` and `u_{m+1} = v_m^(t_m) w_{m+1}`.
    The shifts are solved left to right, each one from a root power membership test.

    Attributes:
        - `rewriter` (ElementRewriter): Multiplies separators and tests root power membership.

    Example:
        ```Python
        matcher = ReducedFormMatcher(rewriter)
        assert matcher.matches(reduced_form_of(g), shifted_form(rewriter, g, [1], [-2]))
        ```
    """

    def __init__(self, rewriter: ElementRewriter) -> None:
        self.rewriter: ElementRewriter = rewriter

    def matches(self, left: ReducedForm, right: ReducedForm) -> bool:
        rewriter = self.rewriter
        if left.level != right.level or left.syllable_count != right.syllable_count:
            return False
        if not left.syllable_count:
            return left.separators[0] == right.separators[0]

        carried: Element = IDENTITY
        for position, (mine, theirs) in enumerate(zip(left.factors, right.factors)):
            if mine.root != theirs.root:
                return False
            difference = mine.exponent - theirs.exponent
            if not rewriter.ring.is_integer(difference):
                return False
            exponent_shift: int = rewriter.ring.split_integer(difference)[0]

            body: Element = mine.root.body
            expected: Element = rewriter.multiply(carried, right.separators[position])
            power: int | None = rewriter.root_power_index(
                rewriter.multiply(rewriter.invert(expected), left.separators[position]),
                body,
            )
            if power is None:
                logging.debug(f"Separator {position + 1} leaves the coset of its root")
                return False
            root_shift: int = -power - exponent_shift
            carried = rewriter.power_int(body, root_shift)

        return left.separators[-1] == rewriter.multiply(carried, right.separators[-1])
