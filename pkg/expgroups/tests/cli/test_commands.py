import pytest

from expgroups.api import ExpGroup
from expgroups.cli import Session
from expgroups.cli.commands import CommandRunner
from expgroups.models.enums import ResultPrefix


@pytest.fixture
def runner(group: ExpGroup) -> CommandRunner:
    return CommandRunner(group, Session(alphabet=group.alphabet, seed=5))


@pytest.mark.parametrize(
    "line, expected",
    [
        ("norm a^(t+1)*a^-1", "ok: a^(t)"),
        ("norm a*a^-1", "ok: 1"),
        ("eq a^(t)*b ; a^(t+1)*a^-1*b", "ok: true"),
        ("eq a^(t) ; a^(t^2)", "no: false"),
        ("conj a^(t)*b ; b*a^(t)", "ok: a^(t)"),
        ("conj a ; b", "no: none"),
        ("comm a ; b", "no: false"),
        ("comm a^(t) ; a^(t^2)", "ok: true"),
        ("comm b^-1*a^(t)*b ; b^-1*a^2*b", "ok: true"),
        ("comm a^(t) ; b", "no: false"),
        ("commutator a ; b", "ok: a^-1*b^-1*a*b"),
        ("commutator a^(t) ; a^(t^2)", "ok: 1"),
        ("root b^-1*a^(t)*b", "ok: b ; a ; t"),
        ("root a^(t)*b*a^(t)*b", "ok: 1 ; a^(t)*b ; 2"),
        ("cent b^-1*a^(t)*b", "ok: b ; a"),
        ("cyc a^(-t)*b*a^(t)", "ok: a^(t) ; b"),
        ("level (a^(t)*b)^(t)", "ok: 2"),
        ("len a^(t)*b^(t)", "ok: 2"),
        ("pow a ; t^2", "ok: a^(t^2)"),
        ("pow a^(t)*b ; t", "ok: (a^(t)*b)^(t)"),
        ("eval a^(t)*b ; 2", "ok: a^2*b"),
        ("probe a^(t) ; a^(t^2)", "ok: distinct at -2"),
        ("probe a*b ; a*b", "no: indistinguishable-at-sample"),
    ],
)
def test_command_output(runner: CommandRunner, line: str, expected: str) -> None:
    assert runner.run(line).render() == expected


def test_eval_over_session_points(runner: CommandRunner) -> None:
    runner.session.points = [0, 1, 2]
    assert runner.run("eval a^(t)*b").render() == "ok: 0: b\n1: a*b\n2: a^2*b"


def test_let_binds_names(runner: CommandRunner) -> None:
    assert runner.run("let x = a^(t)*b").render() == "ok: x = a^(t)*b"
    assert runner.run("norm x*x").render() == "ok: a^(t)*b*a^(t)*b"
    assert runner.run("eq x^-1*x ; 1").render() == "ok: true"


@pytest.mark.parametrize("line", ["let a = b", "let t = a", "let eq = a", "let x a"])
def test_let_rejects_bad_names(runner: CommandRunner, line: str) -> None:
    assert runner.run(line).prefix == ResultPrefix.ERR


@pytest.mark.parametrize(
    "line, expected",
    [
        ("frob a", "err: unknown command 'frob'"),
        ("norm a^(q)", "err: column 9: unknown symbol 'q'"),
        ("  norm a^(q)", "err: column 11: unknown symbol 'q'"),
        ("norm a*q", "err: column 8: unknown symbol 'q'"),
        ("eq a*b ; a^(q)", "err: column 13: unknown symbol 'q'"),
        ("conj a ; b*q", "err: column 12: unknown symbol 'q'"),
        ("comm a^(t) ; (b", "err: column 16: expected ')'"),
        ("probe q ; a", "err: column 7: unknown symbol 'q'"),
        ("pow a ; q", "err: column 9: unknown symbol 'q'"),
        ("let x = a^(q)", "err: column 12: unknown symbol 'q'"),
        ("norm", "err: missing expression"),
        ("eq a", "err: expected two arguments separated by ';'"),
        ("eval a ; x", "err: evaluation point 'x' is not an integer"),
    ],
)
def test_errors(runner: CommandRunner, line: str, expected: str) -> None:
    result = runner.run(line)
    assert result.render() == expected
    assert result.exit_code == 2


def test_root_of_identity_is_an_error(runner: CommandRunner) -> None:
    result = runner.run("root 1")
    assert result.prefix == ResultPrefix.ERR


def test_exit_codes(runner: CommandRunner) -> None:
    assert runner.run("eq a ; a").exit_code == 0
    assert runner.run("eq a ; b").exit_code == 1


def test_help_lists_every_command(runner: CommandRunner) -> None:
    result = runner.run("help")
    assert result.lines[0] == "commands:"
    assert len(result.lines) == 17


def test_selftest_command(runner: CommandRunner) -> None:
    result = runner.run("selftest 2")
    assert result.render().startswith("ok: selftest passed")
    assert runner.run("selftest zero").prefix == ResultPrefix.ERR


def test_selftest_defaults_to_the_session_case_count(group: ExpGroup) -> None:
    runner = CommandRunner(group, Session(alphabet=group.alphabet, seed=5, selftest_cases=2))
    result = runner.run("selftest")
    assert result.lines[0] == "selftest passed"
    assert all("(2 cases, 0 failures)" in line for line in result.lines[1:])
