from typing import Mapping

from expgroups.element.element import Element
from expgroups.element.raw import (
    RawExpr,
    RawGenerator,
    RawIdentity,
    RawInverse,
    RawPower,
    RawProduct,
    to_raw,
)
from expgroups.freeword.alphabet import Alphabet
from expgroups.rings.ring_protocol import RingContract
from expgroups.utilities.errors import ExpressionParseError, UnknownSymbolError


class ExpressionParser:
    """
    Reads element text into an expression tree.

    Grammar, whitespace insignificant:

        expr     := factor ('*' factor)*
        factor   := atom ('^' exponent)?
        atom     := name | '(' expr ')' | '1'
        exponent := '(' poly ')' | signedInt

    A name is a generator of the alphabet or a session binding; `^-1` reads as an inverse. Errors carry the 1-based
    column of the offending character, shifted by `offset` when the text is a slice of a longer line.

    Attributes:
        - `alphabet` (Alphabet): The declared generators.
        - `ring` (RingContract): Parses the text between the parentheses of an exponent.

    Example:
        ```Python
        parser = ExpressionParser(Alphabet.from_names(["a", "b"], "t"), PolynomialRing())
        parser.parse("a*b^-1")  # RawProduct((RawGenerator(0), RawInverse(RawGenerator(1))))
        ```
    """

    def __init__(self, alphabet: Alphabet, ring: RingContract) -> None:
        self.alphabet: Alphabet = alphabet
        self.ring: RingContract = ring

    def parse(
        self, text: str, bindings: Mapping[str, Element] | None = None, offset: int = 0
    ) -> RawExpr:
        return _ExpressionScanner(self, text, bindings or {}, offset).parse()


class _ExpressionScanner:
    def __init__(
        self,
        parser: ExpressionParser,
        text: str,
        bindings: Mapping[str, Element],
        offset: int = 0,
    ) -> None:
        self.parser: ExpressionParser = parser
        self.text: str = text
        self.bindings: Mapping[str, Element] = bindings
        self.offset: int = offset
        self.position: int = 0

    def parse(self) -> RawExpr:
        self._skip_whitespace()
        if self._at_end():
            raise self._error("empty expression")
        expression: RawExpr = self._expr()
        self._skip_whitespace()
        if not self._at_end():
            raise self._error(f"unexpected character {self._peek()!r}")
        return expression

    def _expr(self) -> RawExpr:
        factors: list[RawExpr] = [self._factor()]
        while True:
            self._skip_whitespace()
            if self._peek() != "*":
                break
            self.position += 1
            factors.append(self._factor())
        return factors[0] if len(factors) == 1 else RawProduct(tuple(factors))

    def _factor(self) -> RawExpr:
        atom: RawExpr = self._atom()
        self._skip_whitespace()
        if self._peek() != "^":
            return atom
        self.position += 1
        self._skip_whitespace()

        if self._peek() == "(":
            start: int = self.position + 1
            end: int = self.text.find(")", start)
            if end < 0:
                raise self._error("unclosed exponent parenthesis")
            exponent = self.parser.ring.parse(self.text[start:end], offset=self.offset + start)
            self.position = end + 1
            return RawPower(atom, exponent)

        value: int = self._signed_int()
        if value == 1:
            return atom
        if value == -1:
            return RawInverse(atom)
        return RawPower(atom, self.parser.ring.from_int(value))

    def _atom(self) -> RawExpr:
        self._skip_whitespace()
        char: str = self._peek()
        if char == "(":
            self.position += 1
            inner: RawExpr = self._expr()
            self._skip_whitespace()
            if self._peek() != ")":
                raise self._error("expected ')'")
            self.position += 1
            return inner
        if char == "1":
            self.position += 1
            if self._peek().isdigit():
                raise self._error("only 1 may stand for the identity")
            return RawIdentity()
        if char.isalpha() or char == "_":
            return self._name()
        if not char:
            raise self._error("unexpected end of expression")
        raise self._error(f"unexpected character {char!r}")

    def _name(self) -> RawExpr:
        start: int = self.position
        while self._peek().isalnum() or self._peek() == "_":
            self.position += 1
        name: str = self.text[start : self.position]
        if name in self.bindings:
            return to_raw(self.bindings[name])
        alphabet: Alphabet = self.parser.alphabet
        if alphabet.has_name(name):
            return RawGenerator(alphabet.generator(name).index)
        if name == self.parser.ring.indeterminate:
            raise ExpressionParseError(
                f"indeterminate {name!r} outside an exponent", self.offset + start + 1
            )
        raise UnknownSymbolError(f"unknown symbol {name!r}", self.offset + start + 1)

    def _signed_int(self) -> int:
        sign: int = 1
        if self._peek() in ("+", "-"):
            sign = -1 if self._peek() == "-" else 1
            self.position += 1
        start: int = self.position
        while self._peek().isdigit():
            self.position += 1
        if start == self.position:
            raise self._error("expected an integer or a parenthesized exponent")
        return sign * int(self.text[start : self.position])

    def _peek(self) -> str:
        return self.text[self.position] if self.position < len(self.text) else ""

    def _at_end(self) -> bool:
        return self.position >= len(self.text)

    def _skip_whitespace(self) -> None:
        while self._peek().isspace():
            self.position += 1

    def _error(self, reason: str) -> ExpressionParseError:
        return ExpressionParseError(reason, self.offset + self.position + 1)
