import logging
from typing import Iterator

from expgroups.element.element import (
    IDENTITY,
    Base,
    Composite,
    Element,
    PowerFactor,
    is_identity,
    syllable_length,
)
from expgroups.element.rewriting import ElementRewriter
from expgroups.freeword.word import Word
from expgroups.group_ops.handles import CentralizerHandle, RootDecomposition
from expgroups.rings.ring_element import RingElement
from expgroups.utilities.errors import ConjugacyUndecidedError, IdentityInputError


class GroupOperations:
    """
    The algorithm layer over canonical elements: the ring action, roots, centralizers, commutation and conjugacy.

    Every operation is a pure function of its arguments; the memoization lives in the shared rewriter.

    Attributes:
        - `rewriter` (ElementRewriter): Produces canonical forms and canonical roots.

    Methods:
        - `extract_root(element)`: The root decomposition `c^-1 * z^e * c`.
        - `power(element, exponent)`: The ring action.
        - `equals(left, right)`: Equality in the group.
        - `commutes(left, right)`: Whether two elements commute, decided through roots.
        - `centralizer(element)`: The centralizer as a conjugated root module.
        - `cyclic_reduce(element)`: A cyclically reduced conjugate with its conjugator.
        - `conjugate_test(source, target)`: A conjugator taking `source` to `target`, or None.

    Example:
        ```Python
        operations = GroupOperations(ElementRewriter(PolynomialRing()))
        decomposition = operations.extract_root(element)
        assert operations.equals(
            element,
            operations.rewriter.conjugate(
                operations.rewriter.power_factor_element(decomposition.root, decomposition.exponent),
                decomposition.conjugator,
            ),
        )
        ```
    """

    def __init__(self, rewriter: ElementRewriter) -> None:
        self.rewriter: ElementRewriter = rewriter

    def extract_root(self, element: Element) -> RootDecomposition:
        if is_identity(element):
            raise IdentityInputError("Cannot extract the root of the identity")
        conjugator, root, exponent = self.rewriter.roots.decompose(element)
        return RootDecomposition(conjugator, root, exponent)

    def power(self, element: Element, exponent: RingElement) -> Element:
        return self.rewriter.power(element, exponent)

    def equals(self, left: Element, right: Element) -> bool:
        return is_identity(self.rewriter.multiply(left, self.rewriter.invert(right)))

    def commutator(self, left: Element, right: Element) -> Element:
        return self.rewriter.commutator(left, right)

    def level(self, element: Element) -> int:
        return element.level

    def syllable_length(self, element: Element) -> int:
        return syllable_length(element)

    def commutes(self, left: Element, right: Element) -> bool:
        """
        `right` commutes with `left` exactly when it lies in `c^-1 * z^A * c` for the root decomposition of `left`.
        Conjugating by `c^-1` reduces this to membership in `z^A`, which holds when the conjugated element has
        the same root and its own conjugator commutes with `z`.
        """

        if is_identity(left) or is_identity(right):
            return True
        rewriter = self.rewriter
        anchor: RootDecomposition = self.extract_root(left)
        moved: Element = rewriter.conjugate(right, rewriter.invert(anchor.conjugator))
        if is_identity(moved):
            return True
        candidate: RootDecomposition = self.extract_root(moved)
        if candidate.root != anchor.root:
            return False
        return is_identity(
            rewriter.commutator(candidate.conjugator, anchor.root.body)
        )

    def centralizer(self, element: Element) -> CentralizerHandle:
        decomposition: RootDecomposition = self.extract_root(element)
        return CentralizerHandle(decomposition.conjugator, decomposition.root)

    def in_centralizer(self, handle: CentralizerHandle, element: Element) -> bool:
        generator: Element = self.rewriter.conjugate(handle.root.body, handle.conjugator)
        return self.commutes(generator, element)

    def cyclic_reduce(self, element: Element) -> tuple[Element, Element]:
        return self.rewriter.roots.cyclic_reduce(element)

    def conjugacy_representative(self, element: Element) -> Element:
        """`z^e` for the canonical root `z` and exponent `e`; conjugate elements share it."""

        if is_identity(element):
            return IDENTITY
        decomposition: RootDecomposition = self.extract_root(element)
        return self.rewriter.power_factor_element(
            decomposition.root, decomposition.exponent
        )

    def is_proper_power(self, element: Element) -> bool:
        if is_identity(element):
            return False
        exponent: RingElement = self.extract_root(element).exponent
        ring = self.rewriter.ring
        return exponent not in (ring.one(), -ring.one())

    def conjugate_test(self, source: Element, target: Element) -> Element | None:
        """
        Finds `c` with `target = c^-1 * source * c`.

        Both elements are cyclically reduced first. Cores of different level or syllable length are never
        conjugate. A rotation of the parts of one core that lands on the other core gives the conjugator directly;
        otherwise the canonical roots and exponents decide, and the two root conjugators give `c`.

        Returns:
            Element | None: The conjugator, or None when the elements are not conjugate.

        Raises:
            - `ConjugacyUndecidedError`: If the conjugator found does not verify.
        """

        rewriter = self.rewriter
        if self.equals(source, target):
            return IDENTITY
        if is_identity(source) or is_identity(target):
            return None

        source_conjugator, source_core = self.cyclic_reduce(source)
        target_conjugator, target_core = self.cyclic_reduce(target)
        if source_core.level != target_core.level or syllable_length(
            source_core
        ) != syllable_length(target_core):
            return None

        conjugator: Element | None = None
        for prefix in self._rotation_prefixes(source_core):
            rotated: Element = rewriter.conjugate(source_core, prefix)
            if rotated == target_core:
                conjugator = rewriter.product(
                    (rewriter.invert(source_conjugator), prefix, target_conjugator)
                )
                break

        if conjugator is None:
            source_root: RootDecomposition = self.extract_root(source)
            target_root: RootDecomposition = self.extract_root(target)
            if (
                source_root.root != target_root.root
                or source_root.exponent != target_root.exponent
            ):
                return None
            conjugator = rewriter.multiply(
                rewriter.invert(source_root.conjugator), target_root.conjugator
            )

        if not self.equals(rewriter.conjugate(source, conjugator), target):
            raise ConjugacyUndecidedError(
                "The conjugator found for the pair does not verify"
            )
        logging.debug(f"Conjugator found at level {conjugator.level}")
        return conjugator

    def _rotation_prefixes(self, core: Element) -> Iterator[Element]:
        """Products of the leading letters of a word, or of the leading parts of a composite."""

        if isinstance(core, Base):
            letters = core.word.letters()
            for cut in range(len(letters)):
                yield Base(Word.from_letters(letters[:cut]))
            return

        assert isinstance(core, Composite)
        rewriter = self.rewriter
        prefix: Element = IDENTITY
        yield prefix
        for part in core.parts[:-1]:
            piece: Element = (
                rewriter.factor_element(part) if isinstance(part, PowerFactor) else part
            )
            if is_identity(piece):
                continue
            prefix = rewriter.multiply(prefix, piece)
            yield prefix
