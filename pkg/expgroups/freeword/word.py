from dataclasses import dataclass
from typing import Iterable

Letter = tuple[int, int]
"""A single letter: generator index and sign (+1 or -1)."""


@dataclass(frozen=True, slots=True)
class Word:
    """
    A freely reduced word of the ordinary free group, stored as syllables.

    Each syllable is `(generator index, nonzero exponent)` and adjacent syllables use distinct generators, so
    `a^1000` is a single syllable. The empty word is the identity.

    Attributes:
        - `syllables` (tuple[tuple[int, int], ...]): The reduced syllable sequence.
    """

    syllables: tuple[tuple[int, int], ...] = ()

    @classmethod
    def generator(cls, index: int, exponent: int = 1) -> "Word":
        return cls(((index, exponent),)) if exponent else cls()

    @classmethod
    def from_letters(cls, letters: Iterable[Letter]) -> "Word":
        """Builds the reduced word of a letter sequence, cancelling and merging as it goes."""

        stack: list[list[int]] = []
        for index, sign in letters:
            if stack and stack[-1][0] == index:
                stack[-1][1] += sign
                if stack[-1][1] == 0:
                    stack.pop()
            else:
                stack.append([index, sign])
        return cls(tuple((index, exponent) for index, exponent in stack))

    @property
    def is_identity(self) -> bool:
        return not self.syllables

    @property
    def length(self) -> int:
        """Letter length."""

        return sum(abs(exponent) for _, exponent in self.syllables)

    def letters(self) -> list[Letter]:
        expanded: list[Letter] = []
        for index, exponent in self.syllables:
            sign: int = 1 if exponent > 0 else -1
            expanded.extend([(index, sign)] * abs(exponent))
        return expanded

    def generator_indices(self) -> set[int]:
        return {index for index, _ in self.syllables}

    def sort_key(self) -> tuple[tuple[int, int, int], ...]:
        """The fixed word order: generator index, then sign (positive first), then exponent size."""

        return tuple(
            (index, 0 if exponent > 0 else 1, abs(exponent))
            for index, exponent in self.syllables
        )


IDENTITY_WORD: Word = Word()
