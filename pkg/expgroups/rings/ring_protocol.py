from typing import Protocol

from expgroups.rings.ring_element import RingElement


class RingContract(Protocol):
    """
    A protocol for exponent rings: commutative, characteristic zero, containing the integers.

    Group code only talks to rings through this contract, so the integers, the polynomials over the integers and
    later rings share every algorithm. Implementations must be stateless.
    """

    name: str
    indeterminate: str | None

    def zero(self) -> RingElement: ...

    def one(self) -> RingElement: ...

    def from_int(self, value: int) -> RingElement: ...

    def add(self, left: RingElement, right: RingElement) -> RingElement: ...

    def negate(self, element: RingElement) -> RingElement: ...

    def multiply(self, left: RingElement, right: RingElement) -> RingElement: ...

    def is_equal(self, left: RingElement, right: RingElement) -> bool: ...

    def is_integer(self, element: RingElement) -> bool: ...

    def split_integer(self, element: RingElement) -> tuple[int, RingElement]:
        """
        Splits an element into its integer part and the transversal representative of its class modulo the
        integers.

        Args:
            - `element` (RingElement): The element to split.

        Returns:
            tuple[int, RingElement]: `(n, r)` with `element = n + r`; `r` is zero exactly when `element` is an
            integer, and `split_integer(r) == (0, r)`.
        """
        ...

    def parse(self, text: str, offset: int = 0) -> RingElement:
        """
        Parses canonical or hand-written text into an element.

        Args:
            - `text` (str): The text to parse.
            - `offset` (int): Column offset added to reported error positions.

        Raises:
            - `ExpressionParseError`: On malformed input, with a 1-based column.
            - `UnknownSymbolError`: On a name other than the indeterminate.
        """
        ...

    def format(self, element: RingElement) -> str: ...

    @property
    def supports_evaluation(self) -> bool: ...

    def evaluate_at(self, element: RingElement, point: int) -> int:
        """
        Evaluates at an integer point; a ring homomorphism onto the integers that fixes integers.

        Raises:
            - `CapabilityError`: If the ring has no integer retractions.
        """
        ...

    def monomial(self, degree: int, coefficient: int) -> RingElement: ...

    def max_degree(self, element: RingElement) -> int: ...
