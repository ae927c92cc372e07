import logging
from typing import Iterator

from expgroups.freeword.word import IDENTITY_WORD, Letter, Word
from expgroups.utilities.errors import IdentityInputError


def free_multiply(left: Word, right: Word) -> Word:
    """Freely reduced concatenation of two words."""

    if left.is_identity:
        return right
    if right.is_identity:
        return left

    prefix: list[tuple[int, int]] = list(left.syllables)
    suffix: tuple[tuple[int, int], ...] = right.syllables
    position: int = 0
    while prefix and position < len(suffix):
        index, exponent = prefix[-1]
        other_index, other_exponent = suffix[position]
        if index != other_index:
            break
        prefix.pop()
        position += 1
        total: int = exponent + other_exponent
        if total:
            prefix.append((index, total))
            break
    return Word(tuple(prefix) + suffix[position:])


def free_invert(word: Word) -> Word:
    return Word(tuple((index, -exponent) for index, exponent in reversed(word.syllables)))


def free_power(word: Word, exponent: int) -> Word:
    if exponent < 0:
        word, exponent = free_invert(word), -exponent
    result: Word = IDENTITY_WORD
    base: Word = word
    while exponent:
        if exponent & 1:
            result = free_multiply(result, base)
        exponent >>= 1
        if exponent:
            base = free_multiply(base, base)
    return result


def free_commutator(left: Word, right: Word) -> Word:
    """`left^-1 * right^-1 * left * right`."""

    return free_multiply(
        free_multiply(free_invert(left), free_invert(right)),
        free_multiply(left, right),
    )


def free_cyclic_reduce(word: Word) -> tuple[Word, Word]:
    """
    Strips cancelling ends until the word is cyclically reduced.

    Args:
        - `word` (Word): Any reduced word.

    Returns:
        tuple[Word, Word]: `(conjugator, core)` with `word = conjugator^-1 * core * conjugator`, a reduced
        concatenation, and `core` cyclically reduced.

    Example:
        ```Python
        # b^-1 a b -> (b, a)
        conjugator, core = free_cyclic_reduce(Word(((1, -1), (0, 1), (1, 1))))
        ```
    """

    syllables: list[tuple[int, int]] = list(word.syllables)
    conjugator: Word = IDENTITY_WORD
    while len(syllables) >= 2 and syllables[0][0] == syllables[-1][0]:
        index, first = syllables[0]
        _, last = syllables[-1]
        if (first > 0) == (last > 0):
            break
        sign: int = 1 if last > 0 else -1
        stripped: int = min(abs(first), abs(last))
        conjugator = free_multiply(Word.generator(index, sign * stripped), conjugator)
        new_first: int = first + sign * stripped
        new_last: int = last - sign * stripped
        syllables = (
            ([(index, new_first)] if new_first else [])
            + syllables[1:-1]
            + ([(index, new_last)] if new_last else [])
        )
    return conjugator, Word(tuple(syllables))


def free_rotations(core: Word) -> Iterator[tuple[Word, Word]]:
    """
    Yields `(X, rotated)` for every letter rotation of a cyclically reduced word, with
    `rotated = X^-1 * core * X`. At most `core.length` rotations are produced.
    """

    letters: list[Letter] = core.letters()
    if len({letter for letter in letters}) <= 1:
        yield IDENTITY_WORD, core
        return
    for cut in range(len(letters)):
        yield Word.from_letters(letters[:cut]), Word.from_letters(
            letters[cut:] + letters[:cut]
        )


def free_primitive_root(word: Word) -> tuple[Word, int]:
    """
    Returns `(root, exponent)` with `word = root^exponent`, `exponent >= 1` maximal and `root` not a proper power.

    The period of the cyclic core is found by divisor enumeration of its letter length with verification.

    Raises:
        - `IdentityInputError`: If `word` is the identity.
    """

    if word.is_identity:
        raise IdentityInputError("The identity has no primitive root")

    conjugator, core = free_cyclic_reduce(word)
    letters: list[Letter] = core.letters()
    size: int = len(letters)
    period: int = size
    for divisor in range(1, size):
        if size % divisor:
            continue
        if all(letters[position] == letters[position % divisor] for position in range(size)):
            period = divisor
            break

    root_core: Word = Word.from_letters(letters[:period])
    root: Word = free_multiply(
        free_multiply(free_invert(conjugator), root_core), conjugator
    )
    return root, size // period


def free_power_membership(word: Word, base: Word) -> int | None:
    """
    Returns `k` with `word = base^k`, or None when `word` is not a power of `base`.

    Raises:
        - `IdentityInputError`: If `base` is the identity.
    """

    if base.is_identity:
        raise IdentityInputError("Power membership needs a nontrivial base")
    if word.is_identity:
        return 0

    root, root_exponent = free_primitive_root(base)
    conjugator, core = free_cyclic_reduce(root)
    excess: int = word.length - 2 * conjugator.length
    if excess <= 0 or excess % core.length:
        return None
    multiple: int = excess // core.length
    for candidate in (multiple, -multiple):
        if free_power(root, candidate) == word:
            if candidate % root_exponent:
                return None
            return candidate // root_exponent
    return None


def free_conjugacy(source: Word, target: Word) -> Word | None:
    """
    Decides conjugacy in the free group.

    Returns:
        Word | None: A conjugator `c` with `target = c^-1 * source * c`, or None when the cyclic cores are not
        rotations of each other.
    """

    source_conjugator, source_core = free_cyclic_reduce(source)
    target_conjugator, target_core = free_cyclic_reduce(target)
    if source_core.length != target_core.length:
        return None

    for rotation_conjugator, rotated in free_rotations(source_core):
        if rotated == target_core:
            logging.debug(f"Free conjugacy matched after rotation {rotation_conjugator}")
            return free_multiply(
                free_multiply(free_invert(source_conjugator), rotation_conjugator),
                target_conjugator,
            )
    return None


def free_canonical_rotation(core: Word) -> tuple[Word, Word, int]:
    """
    Chooses the least rotation of a cyclically reduced word or of its inverse.

    Args:
        - `core` (Word): A nontrivial cyclically reduced word.

    Returns:
        tuple[Word, Word, int]: `(representative, X, sign)` with `core^sign = X * representative * X^-1`.
    """

    best: tuple[Word, Word, int] | None = None
    for sign in (1, -1):
        oriented: Word = core if sign == 1 else free_invert(core)
        for rotation_conjugator, rotated in free_rotations(oriented):
            if best is None or rotated.sort_key() < best[0].sort_key():
                best = (rotated, rotation_conjugator, sign)
    assert best is not None
    return best
