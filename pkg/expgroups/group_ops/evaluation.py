from expgroups.element.element import Base, Composite, Element, PowerFactor
from expgroups.freeword.operations import free_multiply, free_power
from expgroups.freeword.word import IDENTITY_WORD, Word
from expgroups.rings.ring_protocol import RingContract
from expgroups.utilities.errors import CapabilityError


def evaluate_hom(element: Element, point: int, ring: RingContract) -> Word:
    """
    The homomorphism onto the ordinary free group that substitutes `point` for the indeterminate.

    Every exponent is evaluated with `ring.evaluate_at` and the result is freely reduced. Base words are fixed.

    Args:
        - `element` (Element): The element to evaluate.
        - `point` (int): The integer substituted for the indeterminate.
        - `ring` (RingContract): The exponent ring of the element.

    Returns:
        Word: The image in the free group.

    Raises:
        - `CapabilityError`: If the ring cannot evaluate its elements at integers.

    Example:
        ```Python
        # a^(t^2) * b * a^(-t) at 2 -> a^4 * b * a^-2
        image = evaluate_hom(element, 2, PolynomialRing())
        ```
    """

    if not ring.supports_evaluation:
        raise CapabilityError(f"Ring {ring.name!r} has no evaluation at integer points")
    return _evaluate(element, point, ring)


def _evaluate(element: Element, point: int, ring: RingContract) -> Word:
    if isinstance(element, Base):
        return element.word

    assert isinstance(element, Composite)
    image: Word = IDENTITY_WORD
    for part in element.parts:
        if isinstance(part, PowerFactor):
            piece: Word = free_power(
                _evaluate(part.root.body, point, ring),
                ring.evaluate_at(part.exponent, point),
            )
        else:
            piece = _evaluate(part, point, ring)
        image = free_multiply(image, piece)
    return image
