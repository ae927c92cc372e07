from typing import Mapping

from expgroups.cli.parser import ExpressionParser
from expgroups.configs.configs import EngineConfigs, GenParams, ObfuscationConfigs
from expgroups.element.element import Element, generator_indices
from expgroups.element.formatting import ElementFormatter
from expgroups.element.forms import ReducedForm, audit_reduced_form
from expgroups.element.raw import RawExpr
from expgroups.element.rewriting import ElementRewriter
from expgroups.freeword.alphabet import Alphabet
from expgroups.freeword.word import Word
from expgroups.group_ops.evaluation import evaluate_hom
from expgroups.group_ops.handles import CentralizerHandle, RootDecomposition
from expgroups.group_ops.matcher import ReducedFormMatcher
from expgroups.group_ops.operations import GroupOperations
from expgroups.models.enums import RingKind
from expgroups.oracle.generator import random_element
from expgroups.oracle.obfuscator import Obfuscator
from expgroups.rings.ring_element import RingElement
from expgroups.rings.ring_factory import create_ring
from expgroups.rings.ring_protocol import RingContract
from expgroups.utilities.errors import AlphabetMismatchError
from expgroups.utilities.logger.decorators import logging_decorator


class ExpGroup:
    """
    Main interface for the expgroups package: one free exponential group over a declared alphabet and ring.

    The facade owns one rewriter, so every element it produces shares the same memoized coset and root
    computations.

    Attributes:
        - `alphabet` (Alphabet): The free generators.
        - `ring` (RingContract): The exponent ring.
        - `rewriter` (ElementRewriter): Canonical forms and canonical roots.
        - `operations` (GroupOperations): Roots, centralizers, commutation and conjugacy.
        - `formatter` (ElementFormatter): Canonical text output.
        - `parser` (ExpressionParser): Text input.
        - `matcher` (ReducedFormMatcher): Equality of reduced forms by shift solving.

    Methods:
        - `parse`(text, bindings): Parses and normalizes element text.
        - `format`(element): Canonical text of an element.
        - `multiply`, `invert`, `power`, `equals`, `commutes`, `conjugate_test`, ...: The group operations.
        - `evaluate`(element, point): The free-group image at an integer point.
        - `random_element`(params): A random normalized element.
        - `obfuscate`(element, seed, steps): An equal element as a larger expression tree.

    Example:
        ```python
        group = ExpGroup(["a", "b"])
        g = group.parse("a^(t)*b")
        h = group.parse("a^(t+1)*a^-1*b")
        assert group.equals(g, h)
        print(group.format(group.power(g, group.exponent("t"))))  # (a^(t)*b)^(t)
        ```
    """

    def __init__(
        self,
        generators: list[str] | tuple[str, ...],
        ring: RingKind | str = RingKind.POLYNOMIAL,
        obfuscation_configs: ObfuscationConfigs | None = None,
    ) -> None:
        self.ring: RingContract = create_ring(ring)
        self.alphabet: Alphabet = Alphabet.from_names(
            list(generators), self.ring.indeterminate
        )
        self.rewriter: ElementRewriter = ElementRewriter(self.ring)
        self.operations: GroupOperations = GroupOperations(self.rewriter)
        self.formatter: ElementFormatter = ElementFormatter(self.alphabet, self.ring)
        self.parser: ExpressionParser = ExpressionParser(self.alphabet, self.ring)
        self.matcher: ReducedFormMatcher = ReducedFormMatcher(self.rewriter)
        self.obfuscator: Obfuscator = Obfuscator(
            self.ring, len(self.alphabet), obfuscation_configs
        )

    @classmethod
    def from_configs(cls, configs: EngineConfigs) -> "ExpGroup":
        return cls(configs.generators, configs.ring)

    @logging_decorator(message="Parsing element text")
    def parse(
        self, text: str, bindings: Mapping[str, Element] | None = None, offset: int = 0
    ) -> Element:
        return self.normalize(self.parse_raw(text, bindings, offset))

    def parse_raw(
        self, text: str, bindings: Mapping[str, Element] | None = None, offset: int = 0
    ) -> RawExpr:
        return self.parser.parse(text, bindings, offset)

    def exponent(self, text: str) -> RingElement:
        return self.ring.parse(text)

    def normalize(self, expression: RawExpr) -> Element:
        return self.rewriter.normalize(expression)

    def format(self, element: Element) -> str:
        return self.formatter.format(element)

    def format_word(self, word: Word) -> str:
        return self.formatter.format_word(word)

    def format_exponent(self, exponent: RingElement) -> str:
        return self.ring.format(exponent)

    def multiply(self, left: Element, right: Element) -> Element:
        self._check(left, right)
        return self.rewriter.multiply(left, right)

    def invert(self, element: Element) -> Element:
        self._check(element)
        return self.rewriter.invert(element)

    def power(self, element: Element, exponent: RingElement | int) -> Element:
        self._check(element)
        if isinstance(exponent, int):
            exponent = self.ring.from_int(exponent)
        return self.operations.power(element, exponent)

    def equals(self, left: Element, right: Element) -> bool:
        self._check(left, right)
        return self.operations.equals(left, right)

    def commutator(self, left: Element, right: Element) -> Element:
        self._check(left, right)
        return self.operations.commutator(left, right)

    def commutes(self, left: Element, right: Element) -> bool:
        self._check(left, right)
        return self.operations.commutes(left, right)

    @logging_decorator(message="Extracting a root")
    def extract_root(self, element: Element) -> RootDecomposition:
        self._check(element)
        return self.operations.extract_root(element)

    def centralizer(self, element: Element) -> CentralizerHandle:
        self._check(element)
        return self.operations.centralizer(element)

    def cyclic_reduce(self, element: Element) -> tuple[Element, Element]:
        self._check(element)
        return self.operations.cyclic_reduce(element)

    @logging_decorator(message="Testing conjugacy")
    def conjugate_test(self, source: Element, target: Element) -> Element | None:
        self._check(source, target)
        return self.operations.conjugate_test(source, target)

    def level(self, element: Element) -> int:
        return self.operations.level(element)

    def syllable_length(self, element: Element) -> int:
        return self.operations.syllable_length(element)

    def evaluate(self, element: Element, point: int) -> Word:
        self._check(element)
        return evaluate_hom(element, point, self.ring)

    def matcher_equals(self, left: ReducedForm, right: ReducedForm) -> bool:
        return self.matcher.matches(left, right)

    def audit(self, element: Element) -> list[str]:
        return audit_reduced_form(self.rewriter, element)

    def random_element(self, params: GenParams) -> Element:
        if params.alphabet_size > len(self.alphabet):
            raise AlphabetMismatchError(
                f"Generation needs {params.alphabet_size} generators, the alphabet has {len(self.alphabet)}"
            )
        return self.normalize(random_element(params, self.ring))

    def obfuscate(self, element: Element, seed: int, steps: int) -> RawExpr:
        self._check(element)
        return self.obfuscator.obfuscate(element, seed, steps)

    def _check(self, *elements: Element) -> None:
        for element in elements:
            if not self.alphabet.contains_indices(generator_indices(element)):
                raise AlphabetMismatchError(
                    f"Element uses generators outside the {len(self.alphabet)}-letter alphabet"
                )
