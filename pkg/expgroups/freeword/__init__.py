from expgroups.freeword.alphabet import Alphabet, Generator
from expgroups.freeword.operations import (
    free_canonical_rotation,
    free_commutator,
    free_conjugacy,
    free_cyclic_reduce,
    free_invert,
    free_multiply,
    free_power,
    free_power_membership,
    free_primitive_root,
    free_rotations,
)
from expgroups.freeword.word import IDENTITY_WORD, Word

__all__ = [
    "Alphabet",
    "Generator",
    "IDENTITY_WORD",
    "Word",
    "free_canonical_rotation",
    "free_commutator",
    "free_conjugacy",
    "free_cyclic_reduce",
    "free_invert",
    "free_multiply",
    "free_power",
    "free_power_membership",
    "free_primitive_root",
    "free_rotations",
]
