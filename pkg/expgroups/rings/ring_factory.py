from expgroups.models.enums import RingKind
from expgroups.rings.integer_ring import IntegerRing
from expgroups.rings.polynomial_ring import PolynomialRing
from expgroups.rings.ring_protocol import RingContract


def create_ring(kind: RingKind | str) -> RingContract:
    """
    Create an exponent ring from its kind.

    Args:
        - `kind` (RingKind | str): `zt` for the integer polynomials, `z` for the integers.

    Returns:
        RingContract: The ring instance.
    """
    if kind == RingKind.POLYNOMIAL:
        return PolynomialRing()
    elif kind == RingKind.INTEGER:
        return IntegerRing()
    else:
        raise ValueError(f"Invalid ring kind provided: {kind!r}")
