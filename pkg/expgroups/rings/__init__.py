from expgroups.rings.integer_ring import IntegerRing
from expgroups.rings.polynomial_ring import PolynomialRing
from expgroups.rings.ring_element import RingElement
from expgroups.rings.ring_factory import create_ring
from expgroups.rings.ring_protocol import RingContract

__all__ = [
    "IntegerRing",
    "PolynomialRing",
    "RingContract",
    "RingElement",
    "create_ring",
]
