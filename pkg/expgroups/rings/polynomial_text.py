from expgroups.rings.ring_element import RingElement
from expgroups.utilities.errors import ExpressionParseError, UnknownSymbolError


def format_polynomial(element: RingElement, indeterminate: str | None) -> str:
    """
    Renders an exponent in canonical text: descending degree, `*` between coefficient and indeterminate,
    `0` for zero.

    Example:
        ```Python
        format_polynomial(RingElement.from_mapping({2: 3, 0: 1}), "t")  # "3*t^2+1"
        format_polynomial(RingElement.from_mapping({1: -1}), "t")  # "-t"
        ```
    """

    if element.is_zero:
        return "0"

    pieces: list[str] = []
    for degree, coefficient in element.terms:
        if degree == 0:
            text = str(coefficient)
        else:
            if indeterminate is None:
                raise ValueError("Non-constant element in a ring without indeterminate")
            power: str = indeterminate if degree == 1 else f"{indeterminate}^{degree}"
            if coefficient == 1:
                text = power
            elif coefficient == -1:
                text = f"-{power}"
            else:
                text = f"{coefficient}*{power}"
        if pieces and not text.startswith("-"):
            text = f"+{text}"
        pieces.append(text)
    return "".join(pieces)


class PolynomialScanner:
    """
    Recursive-descent reader for `poly := term (('+'|'-') term)*`, `term := coeff | coeff? 't' ('^' nat)?`.

    An optional `*` may separate coefficient and indeterminate. Whitespace is insignificant. Columns in errors are
    1-based and shifted by `offset` so that exponents embedded in a longer expression report positions of the
    whole line.
    """

    def __init__(self, text: str, indeterminate: str | None, offset: int = 0) -> None:
        self.text: str = text
        self.indeterminate: str | None = indeterminate
        self.offset: int = offset
        self.position: int = 0

    def parse(self) -> RingElement:
        pairs: list[tuple[int, int]] = []
        self._skip_whitespace()
        if self._at_end():
            raise self._error("empty polynomial")
        pairs.append(self._read_term(sign=1))

        while True:
            self._skip_whitespace()
            if self._at_end():
                break
            char: str = self._peek()
            if char not in "+-":
                raise self._error(f"unexpected character {char!r}")
            self.position += 1
            pairs.append(self._read_term(sign=-1 if char == "-" else 1))

        return RingElement.from_pairs(pairs)

    def _read_term(self, sign: int) -> tuple[int, int]:
        self._skip_whitespace()
        if self._peek() in ("+", "-"):
            if self._peek() == "-":
                sign = -sign
            self.position += 1
            self._skip_whitespace()

        coefficient: int | None = None
        if self._peek_digit():
            coefficient = self._read_digits()
            self._skip_whitespace()

        if self._peek() == "*":
            if coefficient is None:
                raise self._error("'*' without a coefficient")
            self.position += 1
            self._skip_whitespace()
            if not self._peek_identifier_start():
                raise self._error("expected the indeterminate after '*'")

        if self._peek_identifier_start():
            start: int = self.position
            name: str = self._read_identifier()
            if name != self.indeterminate:
                raise UnknownSymbolError(
                    f"unknown symbol {name!r}", self.offset + start + 1
                )
            degree: int = 1
            self._skip_whitespace()
            if self._peek() == "^":
                self.position += 1
                self._skip_whitespace()
                if not self._peek_digit():
                    raise self._error("expected a non-negative integer degree")
                degree = self._read_digits()
            return degree, sign * (1 if coefficient is None else coefficient)

        if coefficient is None:
            if self._at_end():
                raise self._error("unexpected end of polynomial")
            raise self._error(f"unexpected character {self._peek()!r}")
        return 0, sign * coefficient

    def _read_digits(self) -> int:
        start: int = self.position
        while self._peek_digit():
            self.position += 1
        return int(self.text[start : self.position])

    def _read_identifier(self) -> str:
        start: int = self.position
        while self._peek().isalnum() or self._peek() == "_":
            self.position += 1
        return self.text[start : self.position]

    def _peek_digit(self) -> bool:
        return self._peek() in tuple("0123456789")

    def _peek_identifier_start(self) -> bool:
        char: str = self._peek()
        return char.isalpha() or char == "_"

    def _peek(self) -> str:
        return self.text[self.position] if self.position < len(self.text) else ""

    def _at_end(self) -> bool:
        return self.position >= len(self.text)

    def _skip_whitespace(self) -> None:
        while self._peek().isspace():
            self.position += 1

    def _error(self, reason: str) -> ExpressionParseError:
        return ExpressionParseError(reason, self.offset + self.position + 1)
