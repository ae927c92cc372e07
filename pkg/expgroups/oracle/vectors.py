import logging
from pathlib import Path
from typing import TYPE_CHECKING, Iterable

from expgroups.models.enums import VectorExpectation
from expgroups.models.models import VectorCase, VectorOutcome
from expgroups.utilities.errors import ExpGroupError

if TYPE_CHECKING:
    from expgroups.api import ExpGroup

CASE_SEPARATOR: str = ";"


def parse_vector_line(line: str, line_number: int = 0) -> VectorCase | None:
    """
    Reads one line of a test-vector file; blank lines and `#` comments give None.

    Raises:
        - `ValueError`: On an unknown expectation or a missing `;`.
    """

    content: str = line.split("#", 1)[0].strip()
    if not content:
        return None
    keyword, _, rest = content.partition(" ")
    try:
        expectation = VectorExpectation(keyword)
    except ValueError:
        raise ValueError(f"Line {line_number}: unknown expectation {keyword!r}")
    left, separator, right = rest.partition(CASE_SEPARATOR)
    if not separator or not left.strip() or not right.strip():
        raise ValueError(f"Line {line_number}: expected '<expr> ; <expr>'")
    return VectorCase(
        expectation=expectation,
        left=left.strip(),
        right=right.strip(),
        line_number=line_number,
    )


def read_vectors(path: Path) -> list[VectorCase]:
    cases: list[VectorCase] = []
    with open(path, "r", encoding="utf-8") as file:
        for line_number, line in enumerate(file, start=1):
            case: VectorCase | None = parse_vector_line(line, line_number)
            if case is not None:
                cases.append(case)
    logging.debug(f"Read {len(cases)} vector cases from {path}")
    return cases


def write_vectors(path: Path, cases: Iterable[VectorCase], header: str | None = None) -> None:
    lines: list[str] = [f"# {header}"] if header else []
    lines.extend(case.to_line() for case in cases)
    with open(path, "w", encoding="utf-8") as file:
        file.write("\n".join(lines) + "\n")


def run_vectors(engine: "ExpGroup", cases: Iterable[VectorCase]) -> list[VectorOutcome]:
    """Parses both sides of every case and checks the expectation with `equals`."""

    outcomes: list[VectorOutcome] = []
    for case in cases:
        try:
            equal: bool = engine.equals(engine.parse(case.left), engine.parse(case.right))
        except ExpGroupError as e:
            outcomes.append(VectorOutcome(case=case, passed=False, detail=str(e)))
            continue
        expected: bool = case.expectation == VectorExpectation.EQUAL
        outcomes.append(
            VectorOutcome(
                case=case,
                passed=equal == expected,
                detail="" if equal == expected else f"equals returned {equal}",
            )
        )
    return outcomes
