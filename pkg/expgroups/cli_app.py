import logging
from pathlib import Path
from typing import Optional

import typer
from pydantic import ValidationError
from rich import print
from typing_extensions import Annotated

from expgroups.api import ExpGroup
from expgroups.cli.commands import CommandRunner
from expgroups.cli.session import Session
from expgroups.configs.configs import DEFAULT_POINTS, DEFAULT_SELFTEST_CASES, EngineConfigs
from expgroups.models.enums import ResultPrefix, RingKind
from expgroups.models.models import CommandResult
from expgroups.utilities.logger.logging_config import level_from_verbosity, setup_logging

app = typer.Typer()

EXIT_WORDS: frozenset[str] = frozenset({"exit", "quit"})


def parse_points(text: str | None) -> list[int]:
    if text is None:
        return list(DEFAULT_POINTS)
    try:
        return [int(piece) for piece in text.split(",") if piece.strip()]
    except ValueError:
        raise typer.BadParameter(f"'{text}' is not a comma-separated list of integers")


def emit(result: CommandResult) -> None:
    typer.echo(result.render())


def run_batch(runner: CommandRunner, path: Path) -> int:
    """
    Runs every command of a batch file and returns 2 if any of them errored, otherwise 0.
    """
    exit_code: int = 0
    with open(path, "r", encoding="utf-8") as file:
        for line in file:
            command: str = line.strip()
            if not command or command.startswith("#"):
                continue
            result: CommandResult = runner.run(command)
            emit(result)
            if result.prefix == ResultPrefix.ERR:
                exit_code = ResultPrefix.ERR.exit_code
    return exit_code


def repl_loop(runner: CommandRunner) -> None:
    """
    Start an interactive session.
    """
    print(
        "[blue]expgroups[/blue] session started. Type [magenta]'help'[/magenta] for commands, "
        "[magenta]'exit'[/magenta] to end the session."
    )
    while True:
        try:
            line: str = typer.prompt("", prompt_suffix="> ", default="", show_default=False)
        except typer.Abort:
            break
        if line.strip().lower() in EXIT_WORDS:
            break
        if not line.strip() or line.strip().startswith("#"):
            continue
        emit(runner.run(line))


@app.command()
def main(
    gens: Annotated[
        str, typer.Option(help="Comma-separated generator names, for example `a,b`")
    ],
    command: Annotated[
        Optional[str],
        typer.Argument(help="A single command to run, for example \"eq a^(t)*b ; b\""),
    ] = None,
    ring: Annotated[
        RingKind, typer.Option(help="The exponent ring: `zt` for Z[t], `z` for the integers")
    ] = RingKind.POLYNOMIAL,
    seed: Annotated[int, typer.Option(help="Seed for `selftest`")] = 0,
    selftest_cases: Annotated[
        int, typer.Option(help="Case count of a `selftest` given without one")
    ] = DEFAULT_SELFTEST_CASES,
    batch: Annotated[
        Optional[Path],
        typer.Option(help="A file with one command per line; `#` starts a comment"),
    ] = None,
    points: Annotated[
        Optional[str],
        typer.Option(help="Comma-separated evaluation points for `eval` and `probe`"),
    ] = None,
    verbose: Annotated[bool, typer.Option(help="Log engine calls at DEBUG level")] = False,
) -> None:
    """
    Query a free exponential group over the declared generators.

    Runs a batch file, a single command, or an interactive session when neither is given.
    """
    setup_logging(level_from_verbosity(verbose))

    try:
        configs = EngineConfigs(
            generators=[name.strip() for name in gens.split(",")],
            ring=ring,
            seed=seed,
            selftest_cases=selftest_cases,
            points=parse_points(points),
        )
    except ValidationError as e:
        typer.echo(f"{ResultPrefix.ERR} {e.errors()[0]['msg']}")
        raise typer.Exit(ResultPrefix.ERR.exit_code)

    engine: ExpGroup = ExpGroup.from_configs(configs)
    session = Session(
        alphabet=engine.alphabet,
        seed=configs.seed,
        selftest_cases=configs.selftest_cases,
        points=configs.points,
    )
    runner = CommandRunner(engine, session)

    if batch is not None:
        try:
            exit_code: int = run_batch(runner, batch)
        except OSError as e:
            logging.exception("Error reading batch file")
            typer.echo(f"{ResultPrefix.ERR} cannot read batch file: {e}")
            raise typer.Exit(ResultPrefix.ERR.exit_code)
        raise typer.Exit(exit_code)

    if command is not None:
        result: CommandResult = runner.run(command)
        emit(result)
        raise typer.Exit(result.exit_code)

    repl_loop(runner)


if __name__ == "__main__":
    app()
