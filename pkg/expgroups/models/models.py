from pydantic import BaseModel, Field

from expgroups.models.enums import (
    AuditStatus,
    AxiomName,
    ResultPrefix,
    SeparationVerdict,
    VectorExpectation,
)


class AxiomCheck(BaseModel):
    """The outcome of one axiom check."""

    axiom: AxiomName
    status: AuditStatus
    detail: str = ""


class AxiomAuditReport(BaseModel):
    """Class representing the audit of every axiom family on one tuple `(g, h, alpha, beta)`."""

    checks: list[AxiomCheck] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check.status != AuditStatus.FAIL for check in self.checks)

    def status_of(self, axiom: AxiomName) -> AuditStatus:
        for check in self.checks:
            if check.axiom == axiom:
                return check.status
        raise KeyError(axiom)


class ProbeReport(BaseModel):
    """
    Class representing the verdict of an evaluation probe.

    `separating_point` is set only for `SeparationVerdict.DISTINCT`.
    """

    verdict: SeparationVerdict
    points: list[int]
    separating_point: int | None = None


class VectorCase(BaseModel):
    """One line of a test-vector file."""

    expectation: VectorExpectation
    left: str
    right: str
    line_number: int = 0

    def to_line(self) -> str:
        return f"{self.expectation} {self.left} ; {self.right}"


class VectorOutcome(BaseModel):
    """The result of running one test-vector case."""

    case: VectorCase
    passed: bool
    detail: str = ""


class SelftestSection(BaseModel):
    """Class representing one audit family of the self-test with its failures."""

    name: str
    cases: int = 0
    failures: list[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


class SelftestReport(BaseModel):
    """Class representing a full self-test run."""

    seed: int
    sections: list[SelftestSection] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(section.passed for section in self.sections)

    def summary_lines(self) -> list[str]:
        lines: list[str] = []
        for section in self.sections:
            status: str = "PASS" if section.passed else "FAIL"
            lines.append(
                f"{section.name}: {status} ({section.cases} cases, {len(section.failures)} failures)"
            )
            lines.extend(f"  {failure}" for failure in section.failures)
        return lines


class CommandResult(BaseModel):
    """
    Class representing the output block of one command.

    Attributes:
        - `prefix` (ResultPrefix): `ok:`, `no:` or `err:`.
        - `lines` (list[str]): The result text; the first line follows the prefix.
    """

    prefix: ResultPrefix
    lines: list[str] = Field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return self.prefix.exit_code

    def render(self) -> str:
        if not self.lines:
            return str(self.prefix)
        head, *rest = self.lines
        return "\n".join([f"{self.prefix} {head}", *rest])
