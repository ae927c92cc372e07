from enum import Enum


class RingKind(str, Enum):
    """Enum of the built-in exponent rings."""

    POLYNOMIAL = "zt"
    INTEGER = "z"

    def __str__(self) -> str:
        return self.value


class ElementKind(str, Enum):
    """Enum of the shapes an element's cyclic core can take."""

    WORD = "WORD"
    ELLIPTIC = "ELLIPTIC"
    HYPERBOLIC = "HYPERBOLIC"

    def __str__(self) -> str:
        return self.value


class CommandName(str, Enum):
    """Enum of the commands understood by the command runner."""

    NORM = "norm"
    EQ = "eq"
    CONJ = "conj"
    COMM = "comm"
    COMMUTATOR = "commutator"
    ROOT = "root"
    CENT = "cent"
    LEVEL = "level"
    LEN = "len"
    POW = "pow"
    EVAL = "eval"
    LET = "let"
    SELFTEST = "selftest"
    CYC = "cyc"
    PROBE = "probe"
    HELP = "help"

    def __str__(self) -> str:
        return self.value


class ResultPrefix(str, Enum):
    """Enum of the prefixes of a command's result block, with their exit codes."""

    OK = "ok:"
    NO = "no:"
    ERR = "err:"

    @property
    def exit_code(self) -> int:
        return {ResultPrefix.OK: 0, ResultPrefix.NO: 1, ResultPrefix.ERR: 2}[self]

    def __str__(self) -> str:
        return self.value


class AxiomName(str, Enum):
    """Enum of the exponential-group axiom checks."""

    UNIT = "g^1 = g"
    ZERO = "g^0 = 1"
    ADDITIVE = "g^(a+b) = g^a*g^b"
    MULTIPLICATIVE = "g^(a*b) = (g^a)^b"
    CONJUGATION = "(h^-1*g*h)^a = h^-1*g^a*h"
    COMMUTING_PRODUCT = "[g,h] = 1 => (g*h)^a = g^a*h^a"

    def __str__(self) -> str:
        return self.value


class AuditStatus(str, Enum):
    """Enum of the outcomes of a single audit check."""

    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"

    def __str__(self) -> str:
        return self.value


class SeparationVerdict(str, Enum):
    """Enum of the verdicts of an evaluation probe. The probe never claims equality."""

    DISTINCT = "distinct"
    INDISTINGUISHABLE_AT_SAMPLE = "indistinguishable-at-sample"

    def __str__(self) -> str:
        return self.value


class ObfuscationStep(str, Enum):
    """Enum of the rewrite steps of obfuscation catalog version 1."""

    SPLIT_EXPONENT = "SPLIT_EXPONENT"
    INSERT_INVERSE_PAIR = "INSERT_INVERSE_PAIR"
    CONJUGATION_REWRITE = "CONJUGATION_REWRITE"
    SHIFT_COMMUTATION = "SHIFT_COMMUTATION"
    DOUBLE_INVERSION = "DOUBLE_INVERSION"
    INVERSE_POWER = "INVERSE_POWER"

    def __str__(self) -> str:
        return self.value


class VectorExpectation(str, Enum):
    """Enum of the expectations of a test-vector line."""

    EQUAL = "EXPECT_EQ"
    NOT_EQUAL = "EXPECT_NE"

    def __str__(self) -> str:
        return self.value
