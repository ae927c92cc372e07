from expgroups.rings.polynomial_text import PolynomialScanner, format_polynomial
from expgroups.rings.ring_element import RingElement


class PolynomialRing:
    """
    The ring of integer polynomials in one indeterminate, the default exponent ring.

    The transversal of the ring modulo the integers is the set of polynomials with zero constant term, so
    `split_integer` peels off the constant term.

    Attributes:
        - `indeterminate` (str): Name of the indeterminate in text. Default is `"t"`.

    Example:
        ```Python
        ring = PolynomialRing()
        a = ring.parse("3*t^2+5")
        assert ring.split_integer(a) == (5, ring.parse("3*t^2"))
        assert ring.evaluate_at(ring.parse("t^2+1"), 2) == 5
        ```
    """

    name: str = "zt"

    def __init__(self, indeterminate: str = "t") -> None:
        self.indeterminate: str | None = indeterminate

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
        return self.split_integer(element)[1].is_zero

    def split_integer(self, element: RingElement) -> tuple[int, RingElement]:
        constant: int = element.constant_term
        if not constant:
            return 0, element
        return constant, RingElement(
            tuple(term for term in element.terms if term[0] != 0)
        )

    def parse(self, text: str, offset: int = 0) -> RingElement:
        return PolynomialScanner(text, self.indeterminate, offset).parse()

    def format(self, element: RingElement) -> str:
        return format_polynomial(element, self.indeterminate)

    @property
    def supports_evaluation(self) -> bool:
        return True

    def evaluate_at(self, element: RingElement, point: int) -> int:
        return sum(coefficient * point**degree for degree, coefficient in element.terms)

    def monomial(self, degree: int, coefficient: int) -> RingElement:
        return RingElement.from_mapping({degree: coefficient})

    def max_degree(self, element: RingElement) -> int:
        return max(element.degree, 0)
