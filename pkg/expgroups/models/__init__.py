from expgroups.models.enums import (
    AuditStatus,
    AxiomName,
    CommandName,
    ElementKind,
    ObfuscationStep,
    ResultPrefix,
    RingKind,
    SeparationVerdict,
    VectorExpectation,
)
from expgroups.models.models import (
    AxiomAuditReport,
    AxiomCheck,
    CommandResult,
    ProbeReport,
    SelftestReport,
    SelftestSection,
    VectorCase,
    VectorOutcome,
)

__all__ = [
    "AuditStatus",
    "AxiomAuditReport",
    "AxiomCheck",
    "AxiomName",
    "CommandName",
    "CommandResult",
    "ElementKind",
    "ObfuscationStep",
    "ProbeReport",
    "ResultPrefix",
    "RingKind",
    "SelftestReport",
    "SelftestSection",
    "SeparationVerdict",
    "VectorCase",
    "VectorExpectation",
    "VectorOutcome",
]
