import random

from expgroups.configs.configs import GenParams
from expgroups.element.raw import (
    RawExpr,
    RawGenerator,
    RawPower,
    RawProduct,
)
from expgroups.rings.ring_element import RingElement
from expgroups.rings.ring_protocol import RingContract


class RandomElementGenerator:
    """
    Draws random expression trees whose normalized level is at most `params.max_level`.

    A level-0 draw is a product of signed generators. A level-`n` draw is a product of pieces that are either
    level-`n-1` draws or powers of a level-`n-1` draw with a random exponent; since the root of a level-`n-1`
    element has level at most `n-1`, such a power has level at most `n`. All randomness comes from one
    `random.Random`, so a fixed seed reproduces every draw.

    Attributes:
        - `params` (GenParams): Bounds of the draws.
        - `ring` (RingContract): The exponent ring.
        - `rng` (random.Random): The seeded source of randomness.

    Example:
        ```Python
        generator = RandomElementGenerator(GenParams(max_level=1, seed=3), PolynomialRing())
        expression = generator.expression()
        ```
    """

    def __init__(self, params: GenParams, ring: RingContract) -> None:
        self.params: GenParams = params
        self.ring: RingContract = ring
        self.rng: random.Random = random.Random(params.seed)

    def expression(self, level: int | None = None) -> RawExpr:
        target: int = self.params.max_level if level is None else level
        if target == 0:
            return self.word()

        pieces: list[RawExpr] = []
        for _ in range(self.rng.randint(1, self.params.max_syllables)):
            if self.rng.random() < 0.6:
                pieces.append(RawPower(self._power_base(target - 1), self.exponent()))
            else:
                pieces.append(self.expression(self.rng.randint(0, target - 1)))
        return pieces[0] if len(pieces) == 1 else RawProduct(tuple(pieces))

    def word(self, max_letters: int | None = None) -> RawExpr:
        limit: int = self.params.max_syllables if max_letters is None else max_letters
        letters: list[RawExpr] = [
            RawGenerator(
                self.rng.randrange(self.params.alphabet_size), self.rng.choice((1, -1))
            )
            for _ in range(self.rng.randint(1, limit))
        ]
        return letters[0] if len(letters) == 1 else RawProduct(tuple(letters))

    def exponent(self) -> RingElement:
        """A random exponent; non-integer whenever the ring and `max_degree` allow it."""

        bound: int = self.params.max_coefficient
        if self.ring.indeterminate is None or self.params.max_degree == 0:
            value: int = self.rng.choice(
                [value for value in range(-bound, bound + 1) if value]
            )
            return self.ring.from_int(value)

        degree: int = self.rng.randint(1, self.params.max_degree)
        result: RingElement = self.ring.monomial(
            degree, self.rng.choice([value for value in range(-bound, bound + 1) if value])
        )
        for lower in range(degree):
            result = result + self.ring.monomial(lower, self.rng.randint(-bound, bound))
        return result

    def integer(self, bound: int) -> int:
        return self.rng.randint(-bound, bound)

    def _power_base(self, level: int) -> RawExpr:
        if level == 0:
            return self.word(max_letters=2)
        return self.expression(self.rng.randint(0, level))


def random_element(params: GenParams, ring: RingContract) -> RawExpr:
    """
    One random expression tree, deterministic per `params.seed`.

    Args:
        - `params` (GenParams): Bounds and seed.
        - `ring` (RingContract): The exponent ring.

    Returns:
        RawExpr: A tree whose normalized level is at most `params.max_level`.
    """

    return RandomElementGenerator(params, ring).expression()
