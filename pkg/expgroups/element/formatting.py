from expgroups.element.element import Base, Composite, Element, PowerFactor
from expgroups.freeword.alphabet import Alphabet
from expgroups.freeword.word import Word
from expgroups.rings.ring_protocol import RingContract

IDENTITY_TEXT: str = "1"


class ElementFormatter:
    """
    Renders canonical elements in the text grammar the parser reads.

    Words are written syllable by syllable (`a`, `a^2`, `a^-1`) joined by `*`. A power factor is written `a^(t)`
    when its root is a single generator and `(root)^(exponent)` otherwise; identity separators are left out. The
    identity prints as `1`.

    Attributes:
        - `alphabet` (Alphabet): Supplies generator names.
        - `ring` (RingContract): Formats exponents.

    Example:
        ```Python
        formatter = ElementFormatter(Alphabet.from_names(["a", "b"], "t"), PolynomialRing())
        formatter.format(element)  # "b*a^(2*t)"
        ```
    """

    def __init__(self, alphabet: Alphabet, ring: RingContract) -> None:
        self.alphabet: Alphabet = alphabet
        self.ring: RingContract = ring

    def format(self, element: Element) -> str:
        pieces: list[str] = self._pieces(element)
        return "*".join(pieces) if pieces else IDENTITY_TEXT

    def format_word(self, word: Word) -> str:
        return self.format(Base(word))

    def _pieces(self, element: Element) -> list[str]:
        if isinstance(element, Base):
            return [self._syllable(index, exponent) for index, exponent in element.word.syllables]

        assert isinstance(element, Composite)
        pieces: list[str] = []
        for part in element.parts:
            if isinstance(part, PowerFactor):
                pieces.append(self._factor(part))
            else:
                pieces.extend(self._pieces(part))
        return pieces

    def _syllable(self, index: int, exponent: int) -> str:
        name: str = self.alphabet.name_of(index)
        return name if exponent == 1 else f"{name}^{exponent}"

    def _factor(self, factor: PowerFactor) -> str:
        exponent: str = self.ring.format(factor.exponent)
        body: Element = factor.root.body
        if isinstance(body, Base) and body.word.syllables and len(body.word.syllables) == 1:
            index, power = body.word.syllables[0]
            if power == 1:
                return f"{self.alphabet.name_of(index)}^({exponent})"
        return f"({self.format(body)})^({exponent})"
