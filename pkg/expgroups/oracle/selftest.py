import logging
import random
from typing import TYPE_CHECKING, Callable

from expgroups.configs.configs import GenParams
from expgroups.element.element import Element
from expgroups.element.forms import reduced_form_of, shifted_form
from expgroups.freeword.operations import free_multiply
from expgroups.models.enums import AuditStatus
from expgroups.models.models import SelftestReport, SelftestSection
from expgroups.oracle.audits import axiom_audit
from expgroups.oracle.generator import RandomElementGenerator

if TYPE_CHECKING:
    from expgroups.api import ExpGroup

SELFTEST_POINTS: tuple[int, ...] = (-2, -1, 0, 1, 2, 3)
OBFUSCATION_STEPS: int = 12


def run_selftest(engine: "ExpGroup", cases: int, seed: int) -> SelftestReport:
    """
    Runs the audit families on random elements of levels up to 1 and collects the failures.

    Families: exponential-group axioms, obfuscation round trip, evaluation homomorphism, structural audit of the
    reduced form, and agreement of the reduced-form matcher with `equals`.

    Args:
        - `engine` (ExpGroup): The engine under test.
        - `cases` (int): Random cases per family.
        - `seed` (int): Seed of every random draw.

    Returns:
        SelftestReport: One section per family.
    """

    params = GenParams(
        alphabet_size=min(2, len(engine.alphabet)),
        max_level=1,
        max_syllables=2,
        max_degree=1 if engine.ring.indeterminate else 0,
        max_coefficient=2,
        seed=seed,
    )
    generator = RandomElementGenerator(params, engine.ring)
    rng = random.Random(seed)

    def draw() -> Element:
        return engine.normalize(generator.expression())

    sections: list[SelftestSection] = [
        _section("axioms", cases, lambda: _axiom_case(engine, draw(), draw(), generator)),
        _section(
            "obfuscation",
            cases,
            lambda: _obfuscation_case(engine, draw(), rng.randrange(1 << 30)),
        ),
        _section("evaluation", cases, lambda: _evaluation_case(engine, draw(), draw())),
        _section("reduced-form", cases, lambda: _audit_case(engine, draw())),
        _section("matcher", cases, lambda: _matcher_case(engine, draw(), draw(), rng)),
    ]
    report = SelftestReport(seed=seed, sections=sections)
    logging.info(f"Self-test with seed {seed}: {'PASS' if report.passed else 'FAIL'}")
    return report


def _section(name: str, cases: int, case: Callable[[], str | None]) -> SelftestSection:
    section = SelftestSection(name=name, cases=cases)
    for index in range(cases):
        failure: str | None = case()
        if failure is not None:
            section.failures.append(f"case {index}: {failure}")
    return section


def _axiom_case(
    engine: "ExpGroup", g: Element, h: Element, generator: RandomElementGenerator
) -> str | None:
    report = axiom_audit(engine.operations, g, h, generator.exponent(), generator.exponent())
    if report.passed:
        return None
    failed: list[str] = [
        str(check.axiom) for check in report.checks if check.status == AuditStatus.FAIL
    ]
    return f"{engine.format(g)} ; {engine.format(h)}: {', '.join(failed)}"


def _obfuscation_case(engine: "ExpGroup", g: Element, seed: int) -> str | None:
    restored: Element = engine.normalize(engine.obfuscate(g, seed, OBFUSCATION_STEPS))
    if engine.equals(restored, g):
        return None
    return f"{engine.format(g)} came back as {engine.format(restored)} (seed {seed})"


def _evaluation_case(engine: "ExpGroup", g: Element, h: Element) -> str | None:
    product: Element = engine.multiply(g, h)
    for point in SELFTEST_POINTS:
        if engine.evaluate(product, point) != free_multiply(
            engine.evaluate(g, point), engine.evaluate(h, point)
        ):
            return f"{engine.format(g)} ; {engine.format(h)} at {point}"
    return None


def _audit_case(engine: "ExpGroup", g: Element) -> str | None:
    problems: list[str] = engine.audit(g)
    return f"{engine.format(g)}: {'; '.join(problems)}" if problems else None


def _matcher_case(engine: "ExpGroup", g: Element, h: Element, rng: random.Random) -> str | None:
    size: int = engine.syllable_length(h) if h.level else 0
    shifted = shifted_form(
        engine.rewriter,
        h,
        [rng.randint(-2, 2) for _ in range(size)],
        [rng.randint(-2, 2) for _ in range(size)],
    )
    for candidate in (g, h):
        if engine.matcher_equals(reduced_form_of(candidate), shifted) != engine.equals(candidate, h):
            return f"{engine.format(candidate)} ; {engine.format(h)}"
    return None
