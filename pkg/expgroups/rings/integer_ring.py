from expgroups.rings.polynomial_text import PolynomialScanner, format_polynomial
from expgroups.rings.ring_element import RingElement


class IntegerRing:
    """
    The degenerate exponent ring of the integers. Every exponent is an integer, so the free exponential group
    over it is the ordinary free group and no power factors ever appear.
    """

    name: str = "z"
    indeterminate: str | None = None

    def zero(self) -> RingElement:
        return RingElement()

    def one(self) -> RingElement:
        return RingElement.from_int(1)

    def from_int(self, value: int) -> RingElement:
        return RingElement.from_int(value)

    def add(self, left: RingElement, right: RingElement) -> RingElement:
        return left + right

    def negate(self, element: RingElement) -> RingElement:
        return -element

    def multiply(self, left: RingElement, right: RingElement) -> RingElement:
        return left * right

    def is_equal(self, left: RingElement, right: RingElement) -> bool:
        return left == right

    def is_integer(self, element: RingElement) -> bool:
        return True

    def split_integer(self, element: RingElement) -> tuple[int, RingElement]:
        return element.constant_term, RingElement()

    def parse(self, text: str, offset: int = 0) -> RingElement:
        return PolynomialScanner(text, None, offset).parse()

    def format(self, element: RingElement) -> str:
        return format_polynomial(element, None)

    @property
    def supports_evaluation(self) -> bool:
        return True

    def evaluate_at(self, element: RingElement, point: int) -> int:
        return element.constant_term

    def monomial(self, degree: int, coefficient: int) -> RingElement:
        if degree:
            raise ValueError("The integer ring has no indeterminate")
        return RingElement.from_int(coefficient)

    def max_degree(self, element: RingElement) -> int:
        return 0
