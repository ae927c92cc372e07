from dataclasses import dataclass, field

from expgroups.configs.configs import DEFAULT_POINTS, DEFAULT_SELFTEST_CASES
from expgroups.element.element import Element
from expgroups.freeword.alphabet import GENERATOR_NAME_PATTERN, RESERVED_NAMES, Alphabet
from expgroups.utilities.errors import CommandError


@dataclass
class Session:
    """
    The state of one command-line session: declarations plus `let` bindings.

    Attributes:
        - `alphabet` (Alphabet): The declared generators.
        - `seed` (int): Seed for `selftest`.
        - `selftest_cases` (int): Case count of a `selftest` given no count.
        - `points` (list[int]): Points for `eval` and `probe`.
        - `bindings` (dict[str, Element]): Names bound with `let`.
    """

    alphabet: Alphabet
    seed: int = 0
    selftest_cases: int = DEFAULT_SELFTEST_CASES
    points: list[int] = field(default_factory=lambda: list(DEFAULT_POINTS))
    bindings: dict[str, Element] = field(default_factory=dict)

    def bind(self, name: str, element: Element) -> None:
        """
        Raises:
            - `CommandError`: If the name is malformed, a generator, the indeterminate or a command word.
        """

        if not GENERATOR_NAME_PATTERN.fullmatch(name):
            raise CommandError(f"Invalid binding name {name!r}")
        if self.alphabet.has_name(name):
            raise CommandError(f"Binding {name!r} would shadow a generator")
        if name == self.alphabet.indeterminate or name in RESERVED_NAMES:
            raise CommandError(f"Binding name {name!r} is reserved")
        self.bindings[name] = element
