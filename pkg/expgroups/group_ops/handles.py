from dataclasses import dataclass

from expgroups.element.element import Element, RootElement
from expgroups.rings.ring_element import RingElement


@dataclass(frozen=True, slots=True)
class RootDecomposition:
    """
    `element = conjugator^-1 * root^exponent * conjugator`, with `root` the canonical primitive root.

    Attributes:
        - `conjugator` (Element): Moves the element onto a power of its canonical root.
        - `root` (RootElement): The canonical primitive root.
        - `exponent` (RingElement): A ring element for a single power factor core, an integer otherwise.
    """

    conjugator: Element
    root: RootElement
    exponent: RingElement


@dataclass(frozen=True, slots=True)
class CentralizerHandle:
    """The centralizer `conjugator^-1 * root^A * conjugator`, a free module of rank one over the ring."""

    conjugator: Element
    root: RootElement
