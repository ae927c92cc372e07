from functools import lru_cache, reduce
from typing import Callable, Iterable

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
    syllable_length,
)
from expgroups.element.raw import (
    RawExpr,
    RawGenerator,
    RawIdentity,
    RawInverse,
    RawPower,
    RawProduct,
)
from expgroups.element.roots import RootCanonicalizer
from expgroups.freeword.operations import (
    free_invert,
    free_multiply,
    free_power_membership,
)
from expgroups.freeword.word import Word
from expgroups.rings.ring_element import RingElement
from expgroups.rings.ring_protocol import RingContract

CACHE_SIZE: int = 1 << 14


class ElementRewriter:
    """
    The rewriting process of the centralizer-extension tower, producing canonical forms.

    Multiplication concatenates two canonical forms, merges or cancels power factors across the joint while the
    separator there is a power of the shared root, and then restores canonical form from right to left: every
    separator is replaced by the least element of its left coset by the root to its left, the integer parts of
    exponents travel leftwards and `u_1` absorbs what remains. Canonical forms are unique, so two elements are equal
    exactly when they are structurally equal.

    Coset and root computations are pure functions of immutable values and are memoized per rewriter.

    Attributes:
        - `ring` (RingContract): The exponent ring.
        - `roots` (RootCanonicalizer): Cyclic reduction and canonical roots, sharing this rewriter.

    Example:
        ```Python
        rewriter = ElementRewriter(PolynomialRing())
        a_t = rewriter.normalize(RawPower(RawGenerator(0), ring.parse("t")))
        assert rewriter.multiply(a_t, a_t) == rewriter.normalize(RawPower(RawGenerator(0), ring.parse("2*t")))
        ```
    """

    def __init__(self, ring: RingContract) -> None:
        self.ring: RingContract = ring
        self.roots: RootCanonicalizer = RootCanonicalizer(self)
        self.left_coset_representative: Callable[
            [Element, Element], tuple[int, Element]
        ] = lru_cache(maxsize=CACHE_SIZE)(self._left_coset_representative)
        self.right_coset_representative: Callable[
            [Element, Element], tuple[Element, int]
        ] = lru_cache(maxsize=CACHE_SIZE)(self._right_coset_representative)
        self.root_power_index: Callable[[Element, Element], int | None] = lru_cache(
            maxsize=CACHE_SIZE
        )(self._root_power_index)
        self.power_int: Callable[[Element, int], Element] = lru_cache(
            maxsize=CACHE_SIZE
        )(self._power_int)

    def multiply(self, left: Element, right: Element) -> Element:
        if is_identity(left):
            return right
        if is_identity(right):
            return left

        top: int = max(left.level, right.level)
        if top == 0:
            assert isinstance(left, Base) and isinstance(right, Base)
            return Base(free_multiply(left.word, right.word))

        left_separators, left_factors = _parts_at(left, top)
        right_separators, right_factors = _parts_at(right, top)
        separators: list[Element] = (
            left_separators[:-1]
            + [self.multiply(left_separators[-1], right_separators[0])]
            + right_separators[1:]
        )
        factors: list[PowerFactor] = left_factors + right_factors

        joint: int = len(left_factors)
        while 1 <= joint < len(factors):
            before, after = factors[joint - 1], factors[joint]
            if before.root != after.root:
                break
            shift: int | None = self.root_power_index(
                separators[joint], before.root.body
            )
            if shift is None:
                break

            total: RingElement = before.exponent + after.exponent + shift
            whole, remainder = self.ring.split_integer(total)
            if remainder.is_zero:
                separators[joint - 1 : joint + 2] = [
                    self.multiply(
                        self.multiply(
                            separators[joint - 1],
                            self.power_int(before.root.body, whole),
                        ),
                        separators[joint + 1],
                    )
                ]
                del factors[joint - 1 : joint + 1]
                joint -= 1
            else:
                factors[joint - 1 : joint + 1] = [PowerFactor(before.root, total)]
                del separators[joint]
                break

        if not factors:
            return separators[0]
        return self._canonicalize(top, separators, factors, {joint})

    def invert(self, element: Element) -> Element:
        if isinstance(element, Base):
            return Base(free_invert(element.word))

        separators: list[Element] = [
            self.invert(separator) for separator in reversed(element.separators)
        ]
        factors: list[PowerFactor] = [
            PowerFactor(factor.root, -factor.exponent)
            for factor in reversed(element.factors)
        ]
        return self._canonicalize(
            element.level, separators, factors, set(range(1, len(factors) + 1))
        )

    def product(self, elements: Iterable[Element]) -> Element:
        return reduce(self.multiply, elements, IDENTITY)

    def conjugate(self, element: Element, conjugator: Element) -> Element:
        """`conjugator^-1 * element * conjugator`."""

        return self.multiply(
            self.multiply(self.invert(conjugator), element), conjugator
        )

    def commutator(self, left: Element, right: Element) -> Element:
        """`left^-1 * right^-1 * left * right`."""

        return self.multiply(
            self.multiply(self.invert(left), self.invert(right)),
            self.multiply(left, right),
        )

    def _power_int(self, element: Element, exponent: int) -> Element:
        if exponent < 0:
            element, exponent = self.invert(element), -exponent
        result: Element = IDENTITY
        base: Element = element
        while exponent:
            if exponent & 1:
                result = self.multiply(result, base)
            exponent >>= 1
            if exponent:
                base = self.multiply(base, base)
        return result

    def power_factor_element(self, root: RootElement, exponent: RingElement) -> Element:
        """The canonical form of `root^exponent` for any exponent, integer ones included."""

        whole, remainder = self.ring.split_integer(exponent)
        prefix: Element = self.power_int(root.body, whole)
        if remainder.is_zero:
            return prefix
        return Composite(
            root.level + 1, (prefix, IDENTITY), (PowerFactor(root, remainder),)
        )

    def factor_element(self, factor: PowerFactor) -> Element:
        return self.power_factor_element(factor.root, factor.exponent)

    def assemble(
        self, separators: Iterable[Element], factors: Iterable[PowerFactor]
    ) -> Element:
        """Multiplies out `u_1 p_1 u_2 ... p_m u_{m+1}`; the parts need not form a reduced form."""

        separator_list: list[Element] = list(separators)
        result: Element = separator_list[0]
        for factor, separator in zip(factors, separator_list[1:]):
            result = self.multiply(
                self.multiply(result, self.factor_element(factor)), separator
            )
        return result

    def power(self, element: Element, exponent: RingElement) -> Element:
        """
        The ring action: with `element = c^-1 * z^a * c` from the root decomposition the result is
        `c^-1 * z^(a*exponent) * c`, folded into ordinary content when `a*exponent` is an integer.
        """

        if is_identity(element):
            return IDENTITY
        whole, remainder = self.ring.split_integer(exponent)
        if remainder.is_zero:
            return self.power_int(element, whole)

        conjugator, root, root_exponent = self.roots.decompose(element)
        return self.conjugate(
            self.power_factor_element(root, root_exponent * exponent), conjugator
        )

    def normalize(self, expression: RawExpr) -> Element:
        if isinstance(expression, RawIdentity):
            return IDENTITY
        if isinstance(expression, RawGenerator):
            return Base(Word.generator(expression.index, expression.sign))
        if isinstance(expression, RawProduct):
            return self.product(self.normalize(child) for child in expression.children)
        if isinstance(expression, RawInverse):
            return self.invert(self.normalize(expression.child))
        if isinstance(expression, RawPower):
            return self.power(self.normalize(expression.child), expression.exponent)
        raise TypeError(f"Unknown expression node {type(expression).__name__}")

    def _root_power_index(self, element: Element, root_body: Element) -> int | None:
        """Returns `k` with `element = root_body^k`, or None. `root_body` must be a canonical root."""

        if is_identity(element):
            return 0
        if element.level != root_body.level:
            return None
        if isinstance(element, Base):
            assert isinstance(root_body, Base)
            return free_power_membership(element.word, root_body.word)

        count, unit = syllable_length(element), syllable_length(root_body)
        if count % unit:
            return None
        for candidate in (count // unit, -(count // unit)):
            if self.power_int(root_body, candidate) == element:
                return candidate
        return None

    def _left_coset_representative(
        self, element: Element, root_body: Element
    ) -> tuple[int, Element]:
        """
        Returns `(t, representative)` with `element = root_body^t * representative` and `representative` the least
        element of the coset under `element_key`.

        Multiplying by `root_body^-p` can shorten an element by at most its own measure, so only
        `|p| <= 2 * measure(element) / measure(root_body)` needs to be searched.
        """

        if element.level < root_body.level:
            return 0, element
        return self._coset_search(element, root_body, on_left=True)

    def _right_coset_representative(
        self, element: Element, root_body: Element
    ) -> tuple[Element, int]:
        """Returns `(representative, p)` with `element = representative * root_body^p`."""

        if element.level < root_body.level:
            return element, 0
        shift, representative = self._coset_search(element, root_body, on_left=False)
        return representative, shift

    def _coset_search(
        self, element: Element, root_body: Element, *, on_left: bool
    ) -> tuple[int, Element]:
        level: int = root_body.level
        bound: int = (2 * measure_at(element, level)) // measure_at(root_body, level) + 1

        best_shift: int = 0
        best: Element = element
        best_key: tuple = element_key(element)
        for step, shift_sign in ((self.invert(root_body), 1), (root_body, -1)):
            candidate: Element = element
            for distance in range(1, bound + 1):
                candidate = (
                    self.multiply(step, candidate)
                    if on_left
                    else self.multiply(candidate, step)
                )
                key: tuple = element_key(candidate)
                if key < best_key:
                    best_shift, best, best_key = shift_sign * distance, candidate, key
        return best_shift, best

    def _canonicalize(
        self,
        level: int,
        separators: list[Element],
        factors: list[PowerFactor],
        dirty: set[int],
    ) -> Composite:
        """Right-to-left pass over the separators marked dirty; pushes integer parts into `u_{i-1}`."""

        for position in range(len(factors), 0, -1):
            if position not in dirty:
                continue
            factor: PowerFactor = factors[position - 1]
            shift, representative = self.left_coset_representative(
                separators[position], factor.root.body
            )
            separators[position] = representative
            whole, remainder = self.ring.split_integer(factor.exponent + shift)
            factors[position - 1] = PowerFactor(factor.root, remainder)
            if whole:
                separators[position - 1] = self.multiply(
                    separators[position - 1], self.power_int(factor.root.body, whole)
                )
                dirty.add(position - 1)

        return Composite(level, tuple(separators), tuple(factors))


def _parts_at(element: Element, level: int) -> tuple[list[Element], list[PowerFactor]]:
    if isinstance(element, Composite) and element.level == level:
        return list(element.separators), list(element.factors)
    return [element], []
