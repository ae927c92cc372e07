from pathlib import Path
from typing import Callable

import pytest

from expgroups.api import ExpGroup
from expgroups.configs.configs import GenParams
from expgroups.element import Element, raw_size, to_raw
from expgroups.models.enums import AuditStatus, AxiomName, SeparationVerdict, VectorExpectation
from expgroups.models.models import VectorCase
from expgroups.oracle import (
    RandomElementGenerator,
    axiom_audit,
    conjugacy_separated,
    read_vectors,
    run_selftest,
    run_vectors,
    separation_probe,
    write_vectors,
)
from expgroups.oracle.vectors import parse_vector_line
from expgroups.utilities.errors import AlphabetMismatchError

VECTORS_PATH: Path = Path(__file__).parent / "vectors_v1.txt"
RANDOM_CASES: int = 200
DEEP_CASES: int = 100
POINTS: list[int] = [-2, -1, 0, 1, 2, 3]


def test_generator_is_deterministic(group: ExpGroup, small_params: GenParams) -> None:
    first = RandomElementGenerator(small_params, group.ring)
    second = RandomElementGenerator(small_params, group.ring)
    assert [first.expression() for _ in range(10)] == [second.expression() for _ in range(10)]


def test_generator_respects_the_level_bound(group: ExpGroup) -> None:
    params = GenParams(max_level=2, max_syllables=2, max_degree=1, max_coefficient=2, seed=3)
    generator = RandomElementGenerator(params, group.ring)
    for _ in range(5):
        assert group.normalize(generator.expression()).level <= 2


def test_random_element_needs_enough_generators(group: ExpGroup) -> None:
    with pytest.raises(AlphabetMismatchError):
        group.random_element(GenParams(alphabet_size=3))


def test_obfuscation_round_trip(group: ExpGroup, draw_deep: Callable[[], Element]) -> None:
    for seed in range(DEEP_CASES):
        g = draw_deep()
        tree = group.obfuscate(g, seed, steps=30)
        assert group.normalize(tree) == g


def test_obfuscation_grows_the_tree(group: ExpGroup, parse: Callable[[str], Element]) -> None:
    g = parse("a^(t)*b")
    tree = group.obfuscate(g, seed=1, steps=10)
    assert raw_size(tree) > raw_size(to_raw(g))
    assert group.obfuscate(g, seed=1, steps=10) == tree


def test_obfuscation_without_steps(group: ExpGroup, parse: Callable[[str], Element]) -> None:
    g = parse("b^-1*a^(t)*b")
    assert group.obfuscate(g, seed=4, steps=0) == to_raw(g)
    with pytest.raises(ValueError):
        group.obfuscate(g, seed=4, steps=-1)


def test_axiom_audit_on_random_tuples(
    group: ExpGroup, draw_deep: Callable[[], Element], deep_params: GenParams
) -> None:
    generator = RandomElementGenerator(deep_params, group.ring)
    for _ in range(DEEP_CASES):
        report = axiom_audit(
            group.operations, draw_deep(), draw_deep(), generator.exponent(), generator.exponent()
        )
        assert report.passed


def test_axiom_audit_skips_commuting_product(
    group: ExpGroup, parse: Callable[[str], Element], poly
) -> None:
    report = axiom_audit(group.operations, parse("a"), parse("b"), poly("t"), poly("t+1"))
    assert report.status_of(AxiomName.COMMUTING_PRODUCT) == AuditStatus.SKIPPED
    assert report.passed

    report = axiom_audit(
        group.operations, parse("a^(t)"), parse("a^(t^2)"), poly("2*t"), poly("-1")
    )
    assert report.status_of(AxiomName.COMMUTING_PRODUCT) == AuditStatus.PASS


@pytest.mark.parametrize(
    "left, right, points, verdict, separating_point",
    [
        ("a^(t)", "a^(t^2)", [0, 1], SeparationVerdict.INDISTINGUISHABLE_AT_SAMPLE, None),
        ("a^(t)", "a^(t^2)", [0, 1, 2], SeparationVerdict.DISTINCT, 2),
        ("a", "b", [0], SeparationVerdict.DISTINCT, 0),
        ("a^(t)*b", "a^(t)*b", [0, 1, 2], SeparationVerdict.INDISTINGUISHABLE_AT_SAMPLE, None),
    ],
)
def test_separation_probe(
    group: ExpGroup,
    parse: Callable[[str], Element],
    left: str,
    right: str,
    points: list[int],
    verdict: SeparationVerdict,
    separating_point: int | None,
) -> None:
    report = separation_probe(parse(left), parse(right), group.ring, points)
    assert report.verdict == verdict
    assert report.separating_point == separating_point


def test_separation_probe_default_points(group: ExpGroup, parse: Callable[[str], Element]) -> None:
    report = separation_probe(parse("a^(t)"), parse("a^(t^2)"), group.ring)
    assert report.points == [0, 1, 2, 3]
    assert report.separating_point == 2


def test_conjugacy_separated(group: ExpGroup, parse: Callable[[str], Element]) -> None:
    assert conjugacy_separated(parse("a^(t)"), parse("b^(t)"), group.ring, [1])
    assert not conjugacy_separated(parse("a^(t)*b"), parse("b*a^(t)"), group.ring, [0, 1, 2])


def test_distinct_verdicts_imply_inequality(
    group: ExpGroup, draw_deep: Callable[[], Element], draw: Callable[[], Element]
) -> None:
    rewriter = group.rewriter
    for _ in range(DEEP_CASES):
        g, w = draw_deep(), draw()
        pairs = [
            (g, draw_deep()),
            (g, group.multiply(g, draw())),
            (g, rewriter.conjugate(rewriter.conjugate(g, w), group.invert(w))),
        ]
        for left, right in pairs:
            report = separation_probe(left, right, group.ring, POINTS)
            equal: bool = group.equals(left, right)
            if report.verdict == SeparationVerdict.DISTINCT:
                assert not equal
            if equal:
                assert report.verdict == SeparationVerdict.INDISTINGUISHABLE_AT_SAMPLE


def test_certified_non_conjugates_have_no_conjugator(
    group: ExpGroup,
    draw_deep_nontrivial: Callable[[], Element],
    draw_nontrivial: Callable[[], Element],
    draw: Callable[[], Element],
) -> None:
    certified: int = 0
    for _ in range(RANDOM_CASES):
        g, h = draw_deep_nontrivial(), draw_nontrivial()
        if conjugacy_separated(g, h, group.ring, POINTS):
            certified += 1
            assert group.conjugate_test(g, h) is None
            assert group.conjugate_test(h, g) is None
        assert not conjugacy_separated(g, group.rewriter.conjugate(g, draw()), group.ring, POINTS)
    assert certified > 0


def test_read_and_run_vectors(group: ExpGroup) -> None:
    cases = read_vectors(VECTORS_PATH)
    assert len(cases) == 6
    assert cases[0].line_number == 2
    assert [case.expectation for case in cases].count(VectorExpectation.NOT_EQUAL) == 2
    assert all(outcome.passed for outcome in run_vectors(group, cases))


def test_write_vectors_round_trip(tmp_path: Path) -> None:
    cases = [
        VectorCase(expectation=VectorExpectation.EQUAL, left="a^(t)*a", right="a*a^(t)"),
        VectorCase(expectation=VectorExpectation.NOT_EQUAL, left="a", right="b"),
    ]
    path = tmp_path / "vectors.txt"
    write_vectors(path, cases, header="written")

    assert path.read_text(encoding="utf-8").startswith("# written\n")
    assert [(case.left, case.right) for case in read_vectors(path)] == [
        ("a^(t)*a", "a*a^(t)"),
        ("a", "b"),
    ]


def test_failing_vector_is_reported(group: ExpGroup) -> None:
    outcomes = run_vectors(
        group,
        [
            VectorCase(expectation=VectorExpectation.EQUAL, left="a", right="b"),
            VectorCase(expectation=VectorExpectation.EQUAL, left="a^(q)", right="a"),
        ],
    )
    assert [outcome.passed for outcome in outcomes] == [False, False]
    assert outcomes[0].detail == "equals returned False"


@pytest.mark.parametrize("line", ["EXPECT_MAYBE a ; b", "EXPECT_EQ a b", "EXPECT_EQ ; b"])
def test_malformed_vector_lines(line: str) -> None:
    with pytest.raises(ValueError):
        parse_vector_line(line, 1)


def test_comment_lines_are_skipped() -> None:
    assert parse_vector_line("   # nothing here") is None
    assert parse_vector_line("") is None


def test_selftest_passes(group: ExpGroup) -> None:
    report = run_selftest(group, cases=3, seed=11)
    assert report.passed
    assert [section.name for section in report.sections] == [
        "axioms",
        "obfuscation",
        "evaluation",
        "reduced-form",
        "matcher",
    ]
    assert report.summary_lines()[0] == "axioms: PASS (3 cases, 0 failures)"


def test_selftest_over_the_integers(integer_group: ExpGroup) -> None:
    assert run_selftest(integer_group, cases=3, seed=2).passed
