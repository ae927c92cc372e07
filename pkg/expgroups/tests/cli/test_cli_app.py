from pathlib import Path

from typer.testing import CliRunner

from expgroups.cli_app import app, parse_points

cli_runner = CliRunner()


def test_single_command_exit_codes() -> None:
    result = cli_runner.invoke(app, ["--gens", "a,b", "eq a^(t+1) ; a*a^(t)"])
    assert result.exit_code == 0
    assert result.output.strip() == "ok: true"

    result = cli_runner.invoke(app, ["--gens", "a,b", "eq a ; b"])
    assert result.exit_code == 1

    result = cli_runner.invoke(app, ["--gens", "a,b", "norm c"])
    assert result.exit_code == 2
    assert result.output.startswith("err:")


def test_integer_ring_option() -> None:
    result = cli_runner.invoke(app, ["--gens", "a", "--ring", "z", "norm a^(2)*a"])
    assert result.exit_code == 0
    assert result.output.strip() == "ok: a^3"


def test_bad_generators_are_rejected() -> None:
    for gens in ("a,t", "a,a", "a,eq"):
        result = cli_runner.invoke(app, ["--gens", gens, "norm a"])
        assert result.exit_code == 2
        assert result.output.startswith("err:")


def test_points_option() -> None:
    result = cli_runner.invoke(app, ["--gens", "a", "--points", "1,2", "eval a^(t)"])
    assert result.exit_code == 0
    assert result.output.strip() == "ok: 1: a\n2: a^2"


def test_batch_file(tmp_path: Path) -> None:
    batch = tmp_path / "commands.txt"
    batch.write_text("# setup\nlet x = a^(t)*b\n\neq x ; a^(t)*b\nnorm x^-1\n", encoding="utf-8")

    result = cli_runner.invoke(app, ["--gens", "a,b", "--batch", str(batch)])
    assert result.exit_code == 0
    assert result.output.splitlines() == ["ok: x = a^(t)*b", "ok: true", "ok: b^-1*a^(-t)"]


def test_batch_file_with_an_error(tmp_path: Path) -> None:
    batch = tmp_path / "commands.txt"
    batch.write_text("norm a\nnorm q\neq a ; b\n", encoding="utf-8")

    result = cli_runner.invoke(app, ["--gens", "a,b", "--batch", str(batch)])
    assert result.exit_code == 2
    assert len(result.output.splitlines()) == 3


def test_parse_points() -> None:
    assert parse_points("0, 2,-1") == [0, 2, -1]
    assert parse_points(None) == [-2, -1, 0, 1, 2, 3]


def test_comm_reports_the_commutation_verdict() -> None:
    result = cli_runner.invoke(app, ["--gens", "a,b", "comm a^(t) ; b"])
    assert result.exit_code == 1
    assert result.output.strip() == "no: false"

    result = cli_runner.invoke(app, ["--gens", "a,b", "comm b^-1*a^(t)*b ; b^-1*a^(t^2)*b"])
    assert result.exit_code == 0
    assert result.output.strip() == "ok: true"


def test_parse_errors_report_columns_of_the_whole_line() -> None:
    result = cli_runner.invoke(app, ["--gens", "a,b", "eq a*b ; a^(q)"])
    assert result.exit_code == 2
    assert result.output.strip() == "err: column 13: unknown symbol 'q'"


def test_selftest_cases_option() -> None:
    result = cli_runner.invoke(app, ["--gens", "a,b", "--selftest-cases", "2", "selftest"])
    assert result.exit_code == 0
    assert "(2 cases, 0 failures)" in result.output

    result = cli_runner.invoke(app, ["--gens", "a,b", "--selftest-cases", "0", "selftest"])
    assert result.exit_code == 2
