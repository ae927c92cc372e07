import re
from dataclasses import dataclass

from expgroups.models.enums import CommandName

GENERATOR_NAME_PATTERN: re.Pattern[str] = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
RESERVED_NAMES: frozenset[str] = frozenset(
    {command.value for command in CommandName} | {"exit", "quit"}
)


@dataclass(frozen=True, slots=True)
class Generator:
    """A free generator: its text name and its position in the alphabet."""

    name: str
    index: int


@dataclass(frozen=True, slots=True)
class Alphabet:
    """
    An ordered declaration of free generators.

    Words store generator indices, so the alphabet is what turns them back into text. Names must be identifiers,
    unique, distinct from the ring indeterminate and from reserved command words.

    Attributes:
        - `generators` (tuple[Generator, ...]): The generators in declaration order.
        - `indeterminate` (str | None): The ring indeterminate the names must avoid.

    Example:
        ```Python
        alphabet = Alphabet.from_names(["a", "b"], indeterminate="t")
        assert alphabet.generator("b").index == 1
        ```
    """

    generators: tuple[Generator, ...]
    indeterminate: str | None = None

    @classmethod
    def from_names(
        cls, names: list[str] | tuple[str, ...], indeterminate: str | None = None
    ) -> "Alphabet":
        validate_generator_names(names, indeterminate)
        return cls(
            tuple(Generator(name, index) for index, name in enumerate(names)),
            indeterminate,
        )

    def __len__(self) -> int:
        return len(self.generators)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(generator.name for generator in self.generators)

    def has_name(self, name: str) -> bool:
        return name in self.names

    def generator(self, name: str) -> Generator:
        for generator in self.generators:
            if generator.name == name:
                return generator
        raise KeyError(name)

    def name_of(self, index: int) -> str:
        return self.generators[index].name

    def contains_indices(self, indices: set[int]) -> bool:
        return all(0 <= index < len(self.generators) for index in indices)


def validate_generator_names(
    names: list[str] | tuple[str, ...], indeterminate: str | None = None
) -> None:
    """
    Checks a generator declaration.

    Raises:
        - `ValueError`: On an empty declaration, a malformed, duplicate or reserved name, or a name equal to the
          ring indeterminate.
    """

    if not names:
        raise ValueError("At least one generator is required")
    seen: set[str] = set()
    for name in names:
        if not GENERATOR_NAME_PATTERN.fullmatch(name):
            raise ValueError(f"Invalid generator name {name!r}")
        if name in seen:
            raise ValueError(f"Duplicate generator name {name!r}")
        if indeterminate is not None and name == indeterminate:
            raise ValueError(f"Generator name {name!r} clashes with the ring indeterminate")
        if name in RESERVED_NAMES:
            raise ValueError(f"Generator name {name!r} is reserved")
        seen.add(name)
