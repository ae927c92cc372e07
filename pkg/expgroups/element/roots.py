from dataclasses import dataclass, replace
from functools import lru_cache
from typing import TYPE_CHECKING, Callable

from expgroups.element.element import (
    IDENTITY,
    Base,
    Composite,
    Element,
    PowerFactor,
    RootElement,
    element_key,
    is_identity,
    measure_at,
    weight,
)
from expgroups.freeword.operations import (
    free_canonical_rotation,
    free_cyclic_reduce,
    free_invert,
    free_primitive_root,
)
from expgroups.freeword.word import IDENTITY_WORD, Word
from expgroups.models.enums import ElementKind
from expgroups.rings.ring_element import RingElement
from expgroups.utilities.errors import IdentityInputError

if TYPE_CHECKING:
    from expgroups.element.rewriting import ElementRewriter

ROOT_CACHE_SIZE: int = 1 << 12

CyclicEntry = tuple[Element, PowerFactor]
"""A separator followed by the power factor to its right, one step of a cyclic word."""


@dataclass(frozen=True, slots=True)
class CyclicWord:
    """
    A cyclically reduced conjugate of an element: `element = conjugator^-1 * E * conjugator`.

    For `WORD` the core `E` is `word`; for `ELLIPTIC` it is the single power in `factors`; for `HYPERBOLIC` it is
    `x_0 p_0 x_1 p_1 ... x_{m-1} p_{m-1}` with the separators first, and every cyclic rotation of that sequence is
    a reduced form.
    """

    kind: ElementKind
    conjugator: Element
    separators: tuple[Element, ...] = ()
    factors: tuple[PowerFactor, ...] = ()
    word: Word = IDENTITY_WORD


@dataclass(frozen=True, slots=True)
class _RootCandidate:
    body: Element
    conjugator: Element
    exponent: int


class RootCanonicalizer:
    """
    Cyclic reduction, primitive roots and the canonical representative of a root's conjugacy class.

    A hyperbolic cyclic word is gauge-fixed first: each separator is replaced by the least element of its double
    coset between the neighbouring roots and the integer shifts move into the adjacent exponents. The result depends
    only on the conjugacy class up to rotation, so the period of the word gives the primitive root and the least
    rotation of the root or of its inverse gives the class representative. Two conjugate roots therefore always get
    the same body, and distinct stored roots are never conjugate.

    Attributes:
        - `rewriter` (ElementRewriter): The rewriter whose multiplication this class uses.
    """

    def __init__(self, rewriter: "ElementRewriter") -> None:
        self.rewriter: "ElementRewriter" = rewriter
        self.decompose: Callable[
            [Element], tuple[Element, RootElement, RingElement]
        ] = lru_cache(maxsize=ROOT_CACHE_SIZE)(self._decompose)
        self.cyclic_word: Callable[[Element], CyclicWord] = lru_cache(
            maxsize=ROOT_CACHE_SIZE
        )(self._cyclic_word)
        self.double_coset_representative: Callable[
            [Element, Element, Element], tuple[int, Element, int]
        ] = lru_cache(maxsize=ROOT_CACHE_SIZE)(self._double_coset_representative)

    def is_cyclically_reduced(self, element: Element) -> bool:
        if isinstance(element, Base):
            return free_cyclic_reduce(element.word)[0].is_identity
        first, last = element.factors[0], element.factors[-1]
        if first.root != last.root:
            return True
        wrap: Element = self.rewriter.multiply(
            element.separators[-1], element.separators[0]
        )
        return self.rewriter.root_power_index(wrap, first.root.body) is None

    def cyclic_reduce(self, element: Element) -> tuple[Element, Element]:
        """
        Returns `(conjugator, core)` with `element = conjugator^-1 * core * conjugator` and `core` cyclically
        reduced. An element that is already cyclically reduced is its own core unless peeling its outer
        separators gives a lighter one.
        """

        if is_identity(element):
            return IDENTITY, IDENTITY
        conjugator, core = self._core_of(self.cyclic_word(element))
        if self.is_cyclically_reduced(element) and weight(element) <= weight(core):
            return IDENTITY, element
        return conjugator, core

    def _core_of(self, cyclic: CyclicWord) -> tuple[Element, Element]:
        rewriter = self.rewriter
        if cyclic.kind == ElementKind.WORD:
            return cyclic.conjugator, Base(cyclic.word)
        if cyclic.kind == ElementKind.ELLIPTIC:
            return cyclic.conjugator, rewriter.factor_element(cyclic.factors[0])

        head: Element = cyclic.separators[0]
        core: Element = rewriter.assemble(
            [IDENTITY, *cyclic.separators[1:], head], cyclic.factors
        )
        return rewriter.multiply(rewriter.invert(head), cyclic.conjugator), core

    def _cyclic_word(self, element: Element) -> CyclicWord:
        rewriter = self.rewriter
        if isinstance(element, Base):
            conjugator_word, core_word = free_cyclic_reduce(element.word)
            return CyclicWord(ElementKind.WORD, Base(conjugator_word), word=core_word)

        assert isinstance(element, Composite)
        conjugator: Element = element.separators[-1]
        separators: list[Element] = [
            rewriter.multiply(element.separators[-1], element.separators[0]),
            *element.separators[1:-1],
        ]
        factors: list[PowerFactor] = list(element.factors)

        while factors:
            first, last = factors[0], factors[-1]
            if first.root != last.root:
                break
            shift: int | None = rewriter.root_power_index(
                separators[0], first.root.body
            )
            if shift is None:
                break
            if len(factors) == 1:
                return CyclicWord(
                    ElementKind.ELLIPTIC,
                    conjugator,
                    factors=(PowerFactor(first.root, first.exponent + shift),),
                )

            # Rotate the last factor to the front, where it meets the first one.
            conjugator = rewriter.multiply(rewriter.factor_element(last), conjugator)
            total: RingElement = last.exponent + shift + first.exponent
            whole, remainder = rewriter.ring.split_integer(total)
            inner: list[Element] = separators[1:]
            if remainder.is_zero:
                collapsed: Element = rewriter.power_int(first.root.body, whole)
                if len(factors) == 2:
                    separators = [rewriter.multiply(collapsed, inner[0])]
                    factors = []
                else:
                    conjugator = rewriter.multiply(inner[-1], conjugator)
                    separators = [
                        rewriter.multiply(
                            rewriter.multiply(inner[-1], collapsed), inner[0]
                        ),
                        *inner[1:-1],
                    ]
                    factors = factors[1:-1]
            else:
                conjugator = rewriter.multiply(inner[-1], conjugator)
                separators = [inner[-1], *inner[:-1]]
                factors = [PowerFactor(first.root, total), *factors[1:-1]]

        if not factors:
            inner_word: CyclicWord = self.cyclic_word(separators[0])
            return replace(
                inner_word,
                conjugator=rewriter.multiply(inner_word.conjugator, conjugator),
            )
        return CyclicWord(
            ElementKind.HYPERBOLIC, conjugator, tuple(separators), tuple(factors)
        )

    def _decompose(self, element: Element) -> tuple[Element, RootElement, RingElement]:
        """
        Returns `(conjugator, root, exponent)` with `element = conjugator^-1 * root^exponent * conjugator` and
        `root` canonical.

        Raises:
            - `IdentityInputError`: If `element` is the identity.
        """

        if is_identity(element):
            raise IdentityInputError("The identity has no root")

        rewriter = self.rewriter
        cyclic: CyclicWord = self.cyclic_word(element)
        if cyclic.kind == ElementKind.WORD:
            root_word, repeats = free_primitive_root(cyclic.word)
            representative, rotation, sign = free_canonical_rotation(root_word)
            conjugator: Element = rewriter.multiply(
                Base(free_invert(rotation)), cyclic.conjugator
            )
            return (
                conjugator,
                RootElement(Base(representative)),
                rewriter.ring.from_int(sign * repeats),
            )
        if cyclic.kind == ElementKind.ELLIPTIC:
            factor: PowerFactor = cyclic.factors[0]
            return cyclic.conjugator, factor.root, factor.exponent

        candidate: _RootCandidate = self._hyperbolic_root(cyclic)
        return (
            candidate.conjugator,
            RootElement(candidate.body),
            rewriter.ring.from_int(candidate.exponent),
        )

    def _hyperbolic_root(self, cyclic: CyclicWord) -> _RootCandidate:
        rewriter = self.rewriter
        entries, front = self._gauge_fix(cyclic.separators, cyclic.factors)
        period: int = _period(entries)
        repeats: int = len(entries) // period
        entries = entries[:period]
        outer: Element = rewriter.multiply(front, cyclic.conjugator)
        candidates: list[_RootCandidate] = self._rotation_candidates(
            entries, outer, repeats
        )

        # The inverse word, read separator first: x_0^-1 p_{d-1}^-1 x_{d-1}^-1 ... x_1^-1 p_0^-1.
        head: Element = entries[0][0]
        inverse_separators: list[Element] = [
            rewriter.invert(entries[(period - step) % period][0])
            for step in range(period)
        ]
        inverse_factors: list[PowerFactor] = [
            PowerFactor(
                entries[period - 1 - step][1].root,
                -entries[period - 1 - step][1].exponent,
            )
            for step in range(period)
        ]
        inverse_entries, inverse_front = self._gauge_fix(
            inverse_separators, inverse_factors
        )
        inverse_outer: Element = rewriter.multiply(
            inverse_front, rewriter.multiply(rewriter.invert(head), outer)
        )
        candidates.extend(
            self._rotation_candidates(inverse_entries, inverse_outer, -repeats)
        )
        return min(candidates, key=lambda candidate: element_key(candidate.body))

    def _rotation_candidates(
        self, entries: list[CyclicEntry], outer: Element, exponent: int
    ) -> list[_RootCandidate]:
        """
        Every rotation of `R = x_0 p_0 ... x_{d-1} p_{d-1}` written factor first, where the element equals
        `outer^-1 * R^exponent * outer`.
        """

        rewriter = self.rewriter
        candidates: list[_RootCandidate] = []
        prefix: Element = IDENTITY
        for start, (separator, factor) in enumerate(entries):
            rotated: list[CyclicEntry] = entries[start:] + entries[:start]
            body: Element = rewriter.assemble(
                [IDENTITY, *(entry[0] for entry in rotated[1:]), separator],
                [entry[1] for entry in rotated],
            )
            shift: Element = rewriter.invert(rewriter.multiply(prefix, separator))
            candidates.append(
                _RootCandidate(body, rewriter.multiply(shift, outer), exponent)
            )
            prefix = rewriter.multiply(
                rewriter.multiply(prefix, separator), rewriter.factor_element(factor)
            )
        return candidates

    def _gauge_fix(
        self, separators: list[Element] | tuple[Element, ...], factors: list[PowerFactor] | tuple[PowerFactor, ...]
    ) -> tuple[list[CyclicEntry], Element]:
        """
        Replaces each separator by its double coset representative between the neighbouring roots.

        Returns:
            tuple[list[CyclicEntry], Element]: `(entries, front)` where the original cyclic word equals
            `front^-1 * L * front` and `L` is the product of the new entries.
        """

        size: int = len(factors)
        shifts: list[tuple[int, Element, int]] = [
            self.double_coset_representative(
                factors[position - 1].root.body,
                separators[position],
                factors[position].root.body,
            )
            for position in range(size)
        ]
        entries: list[CyclicEntry] = []
        for position in range(size):
            left_shift: int = shifts[(position + 1) % size][0]
            factor: PowerFactor = factors[position]
            entries.append(
                (
                    shifts[position][1],
                    PowerFactor(
                        factor.root, factor.exponent + shifts[position][2] + left_shift
                    ),
                )
            )
        front: Element = self.rewriter.power_int(
            factors[-1].root.body, -shifts[0][0]
        )
        return entries, front

    def _double_coset_representative(
        self, left_body: Element, element: Element, right_body: Element
    ) -> tuple[int, Element, int]:
        """
        Returns `(q, representative, p)` with `element = left_body^q * representative * right_body^p` and
        `representative` the least element of the double coset.

        The double coset minimum is the minimum over `q` of the right coset minima of `left_body^-q * element`;
        only `q` with `|q| * measure(left) <= 3 * measure(element) + measure(left) + measure(right)` can reach it.
        """

        level: int = left_body.level
        if element.level < level:
            return 0, element, 0

        rewriter = self.rewriter
        left_measure: int = measure_at(left_body, level)
        reach: int = (
            3 * measure_at(element, level)
            + left_measure
            + measure_at(right_body, level)
        ) // left_measure + 1

        inverse_left: Element = rewriter.invert(left_body)
        best: tuple[tuple, int, Element, int] | None = None
        for left_shift in range(-reach, reach + 1):
            stripped: Element = rewriter.multiply(
                rewriter.power_int(inverse_left, left_shift), element
            )
            representative, right_shift = rewriter.right_coset_representative(
                stripped, right_body
            )
            key: tuple = element_key(representative)
            if best is None or key < best[0]:
                best = (key, left_shift, representative, right_shift)
        assert best is not None
        return best[1], best[2], best[3]


def _period(entries: list[CyclicEntry]) -> int:
    size: int = len(entries)
    for divisor in range(1, size):
        if size % divisor == 0 and all(
            entries[position] == entries[position % divisor]
            for position in range(size)
        ):
            return divisor
    return size
