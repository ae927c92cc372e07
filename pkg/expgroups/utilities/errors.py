class ExpGroupError(ValueError):
    """Base class for every error raised by the engine."""


class ExpressionParseError(ExpGroupError):
    """
    Malformed ring or element text.

    Attributes:
        - `column` (int): 1-based column of the offending character.
        - `reason` (str): The bare message without the column prefix.
    """

    def __init__(self, reason: str, column: int) -> None:
        self.reason: str = reason
        self.column: int = column
        super().__init__(f"column {column}: {reason}")


class UnknownSymbolError(ExpressionParseError):
    """A name that is neither a generator, the ring indeterminate nor a binding."""


class CapabilityError(ExpGroupError):
    """The ring does not offer an optional capability, such as `evaluate_at`."""


class IdentityInputError(ExpGroupError):
    """An operation that needs a nontrivial element received the identity."""


class AlphabetMismatchError(ExpGroupError):
    """Operands come from different alphabets or rings."""


class ConjugacyUndecidedError(ExpGroupError):
    """The conjugacy search produced a conjugator that failed verification."""


class CommandError(ExpGroupError):
    """Unknown command or malformed command arguments."""
