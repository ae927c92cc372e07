from expgroups.api import ExpGroup
from expgroups.configs import EngineConfigs, GenParams, ObfuscationConfigs
from expgroups.element import Element, ElementRewriter, RawExpr
from expgroups.group_ops import CentralizerHandle, GroupOperations, RootDecomposition
from expgroups.models.enums import RingKind
from expgroups.rings import IntegerRing, PolynomialRing, RingElement, create_ring
from expgroups.utilities.errors import (
    AlphabetMismatchError,
    CapabilityError,
    CommandError,
    ConjugacyUndecidedError,
    ExpGroupError,
    ExpressionParseError,
    IdentityInputError,
    UnknownSymbolError,
)
