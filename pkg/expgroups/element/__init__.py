from expgroups.element.element import (
    IDENTITY,
    Base,
    Composite,
    Element,
    PowerFactor,
    RootElement,
    element_key,
    generator_indices,
    is_identity,
    letter_count,
    syllable_length,
    weight,
)
from expgroups.element.formatting import ElementFormatter
from expgroups.element.forms import (
    ReducedForm,
    assemble_form,
    audit_reduced_form,
    reduced_form_of,
    semicanonical_form,
    shifted_form,
)
from expgroups.element.raw import (
    RawExpr,
    RawGenerator,
    RawIdentity,
    RawInverse,
    RawPower,
    RawProduct,
    raw_size,
    raw_word,
    to_raw,
)
from expgroups.element.rewriting import ElementRewriter
from expgroups.element.roots import CyclicWord, RootCanonicalizer

__all__ = [
    "IDENTITY",
    "Base",
    "Composite",
    "CyclicWord",
    "Element",
    "ElementFormatter",
    "ElementRewriter",
    "PowerFactor",
    "RawExpr",
    "RawGenerator",
    "RawIdentity",
    "RawInverse",
    "RawPower",
    "RawProduct",
    "ReducedForm",
    "RootCanonicalizer",
    "RootElement",
    "assemble_form",
    "audit_reduced_form",
    "element_key",
    "generator_indices",
    "is_identity",
    "letter_count",
    "raw_size",
    "raw_word",
    "reduced_form_of",
    "semicanonical_form",
    "shifted_form",
    "syllable_length",
    "to_raw",
    "weight",
]
