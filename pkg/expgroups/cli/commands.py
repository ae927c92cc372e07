import logging
from typing import Callable, NamedTuple

from expgroups.api import ExpGroup
from expgroups.cli.session import Session
from expgroups.element.element import Element
from expgroups.models.enums import CommandName, ResultPrefix, SeparationVerdict
from expgroups.models.models import CommandResult
from expgroups.oracle.probes import separation_probe
from expgroups.oracle.selftest import run_selftest
from expgroups.utilities.errors import CommandError, ExpGroupError
from expgroups.utilities.logger.decorators import logging_decorator

ARGUMENT_SEPARATOR: str = ";"

HELP_LINES: dict[CommandName, str] = {
    CommandName.NORM: "norm <expr>              canonical form",
    CommandName.EQ: "eq <expr> ; <expr>       equality",
    CommandName.CONJ: "conj <expr> ; <expr>     conjugator c with h = c^-1*g*c",
    CommandName.COMM: "comm <expr> ; <expr>     whether g and h commute",
    CommandName.COMMUTATOR: "commutator <expr> ; <expr>  commutator g^-1*h^-1*g*h",
    CommandName.ROOT: "root <expr>              conjugator ; root ; exponent",
    CommandName.CENT: "cent <expr>              centralizer as conjugator ; root",
    CommandName.LEVEL: "level <expr>             tower level",
    CommandName.LEN: "len <expr>               syllable length",
    CommandName.POW: "pow <expr> ; <exponent>  ring action",
    CommandName.EVAL: "eval <expr> [; k]        free-group image at the points or at k",
    CommandName.LET: "let <name> = <expr>      bind a name",
    CommandName.SELFTEST: "selftest [cases]         randomized audit suite",
    CommandName.CYC: "cyc <expr>               conjugator ; cyclically reduced core",
    CommandName.PROBE: "probe <expr> ; <expr>    evaluation separation probe",
    CommandName.HELP: "help                     this list",
}


class ArgumentSlice(NamedTuple):
    """
    A piece of a command line with the 0-based index where it starts, so parse errors report columns of the
    whole line.
    """

    text: str
    offset: int

    def split(self, separator: str) -> tuple["ArgumentSlice", "ArgumentSlice | None"]:
        left, found, right = self.text.partition(separator)
        if not found:
            return self, None
        return ArgumentSlice(left, self.offset), ArgumentSlice(
            right, self.offset + len(left) + len(separator)
        )


class CommandRunner:
    """
    Executes one command line against an engine and a session.

    Every command produces a `CommandResult`: `ok:` for success or a true answer, `no:` for a false or empty one
    and `err:` for any error, mapped to exit codes 0, 1 and 2.

    Attributes:
        - `engine` (ExpGroup): The group engine.
        - `session` (Session): Bindings, seed, evaluation points and the default selftest size.

    Example:
        ```Python
        runner = CommandRunner(ExpGroup(["a", "b"]), session)
        runner.run("eq a^(t)*b ; a^(t+1)*a^-1*b").render()  # "ok: true"
        ```
    """

    def __init__(self, engine: ExpGroup, session: Session) -> None:
        self.engine: ExpGroup = engine
        self.session: Session = session
        self._handlers: dict[CommandName, Callable[[ArgumentSlice], CommandResult]] = {
            CommandName.NORM: self._norm,
            CommandName.EQ: self._eq,
            CommandName.CONJ: self._conj,
            CommandName.COMM: self._comm,
            CommandName.COMMUTATOR: self._commutator,
            CommandName.ROOT: self._root,
            CommandName.CENT: self._cent,
            CommandName.LEVEL: self._level,
            CommandName.LEN: self._len,
            CommandName.POW: self._pow,
            CommandName.EVAL: self._eval,
            CommandName.LET: self._let,
            CommandName.SELFTEST: self._selftest,
            CommandName.CYC: self._cyc,
            CommandName.PROBE: self._probe,
            CommandName.HELP: self._help,
        }

    @logging_decorator(message="Running command")
    def run(self, line: str) -> CommandResult:
        body: str = line.strip()
        keyword, _, arguments = body.partition(" ")
        start: int = len(line) - len(line.lstrip()) + len(keyword) + 1
        try:
            try:
                command = CommandName(keyword)
            except ValueError:
                raise CommandError(f"unknown command {keyword!r}")
            return self._handlers[command](ArgumentSlice(arguments, start))
        except ExpGroupError as e:
            return CommandResult(prefix=ResultPrefix.ERR, lines=[str(e)])
        except Exception as e:
            logging.exception(f"Command {body!r} failed")
            return CommandResult(prefix=ResultPrefix.ERR, lines=[f"internal error: {e}"])

    def _element(self, arguments: ArgumentSlice) -> Element:
        if not arguments.text.strip():
            raise CommandError("missing expression")
        return self.engine.parse(arguments.text, self.session.bindings, arguments.offset)

    def _pair(self, arguments: ArgumentSlice) -> tuple[ArgumentSlice, ArgumentSlice]:
        left, right = arguments.split(ARGUMENT_SEPARATOR)
        if right is None:
            raise CommandError(f"expected two arguments separated by '{ARGUMENT_SEPARATOR}'")
        return left, right

    def _ok(self, *lines: str) -> CommandResult:
        return CommandResult(prefix=ResultPrefix.OK, lines=list(lines))

    def _no(self, *lines: str) -> CommandResult:
        return CommandResult(prefix=ResultPrefix.NO, lines=list(lines))

    def _verdict(self, value: bool) -> CommandResult:
        return self._ok("true") if value else self._no("false")

    def _norm(self, arguments: ArgumentSlice) -> CommandResult:
        return self._ok(self.engine.format(self._element(arguments)))

    def _eq(self, arguments: ArgumentSlice) -> CommandResult:
        left, right = self._pair(arguments)
        return self._verdict(self.engine.equals(self._element(left), self._element(right)))

    def _conj(self, arguments: ArgumentSlice) -> CommandResult:
        left, right = self._pair(arguments)
        conjugator = self.engine.conjugate_test(self._element(left), self._element(right))
        if conjugator is None:
            return self._no("none")
        return self._ok(self.engine.format(conjugator))

    def _comm(self, arguments: ArgumentSlice) -> CommandResult:
        left, right = self._pair(arguments)
        return self._verdict(self.engine.commutes(self._element(left), self._element(right)))

    def _commutator(self, arguments: ArgumentSlice) -> CommandResult:
        left, right = self._pair(arguments)
        return self._ok(
            self.engine.format(self.engine.commutator(self._element(left), self._element(right)))
        )

    def _root(self, arguments: ArgumentSlice) -> CommandResult:
        decomposition = self.engine.extract_root(self._element(arguments))
        return self._ok(
            " ; ".join(
                (
                    self.engine.format(decomposition.conjugator),
                    self.engine.format(decomposition.root.body),
                    self.engine.format_exponent(decomposition.exponent),
                )
            )
        )

    def _cent(self, arguments: ArgumentSlice) -> CommandResult:
        handle = self.engine.centralizer(self._element(arguments))
        return self._ok(
            f"{self.engine.format(handle.conjugator)} ; {self.engine.format(handle.root.body)}"
        )

    def _level(self, arguments: ArgumentSlice) -> CommandResult:
        return self._ok(str(self.engine.level(self._element(arguments))))

    def _len(self, arguments: ArgumentSlice) -> CommandResult:
        return self._ok(str(self.engine.syllable_length(self._element(arguments))))

    def _pow(self, arguments: ArgumentSlice) -> CommandResult:
        expression, exponent_text = self._pair(arguments)
        exponent = self.engine.ring.parse(exponent_text.text, offset=exponent_text.offset)
        return self._ok(self.engine.format(self.engine.power(self._element(expression), exponent)))

    def _eval(self, arguments: ArgumentSlice) -> CommandResult:
        expression, point_text = arguments.split(ARGUMENT_SEPARATOR)
        element: Element = self._element(expression)
        if point_text is not None:
            try:
                point: int = int(point_text.text.strip())
            except ValueError:
                raise CommandError(f"evaluation point {point_text.text.strip()!r} is not an integer")
            return self._ok(self.engine.format_word(self.engine.evaluate(element, point)))
        return self._ok(
            *(
                f"{point}: {self.engine.format_word(self.engine.evaluate(element, point))}"
                for point in self.session.points
            )
        )

    def _let(self, arguments: ArgumentSlice) -> CommandResult:
        name, expression = arguments.split("=")
        if expression is None:
            raise CommandError("expected 'let <name> = <expr>'")
        element: Element = self._element(expression)
        self.session.bind(name.text.strip(), element)
        return self._ok(f"{name.text.strip()} = {self.engine.format(element)}")

    def _selftest(self, arguments: ArgumentSlice) -> CommandResult:
        cases: int = self.session.selftest_cases
        requested: str = arguments.text.strip()
        if requested:
            if not requested.isdigit() or int(requested) < 1:
                raise CommandError(f"case count {requested!r} is not a positive integer")
            cases = int(requested)
        report = run_selftest(self.engine, cases, self.session.seed)
        lines: list[str] = report.summary_lines()
        return self._ok("selftest passed", *lines) if report.passed else self._no(
            "selftest failed", *lines
        )

    def _cyc(self, arguments: ArgumentSlice) -> CommandResult:
        conjugator, core = self.engine.cyclic_reduce(self._element(arguments))
        return self._ok(f"{self.engine.format(conjugator)} ; {self.engine.format(core)}")

    def _probe(self, arguments: ArgumentSlice) -> CommandResult:
        left, right = self._pair(arguments)
        report = separation_probe(
            self._element(left), self._element(right), self.engine.ring, self.session.points
        )
        if report.verdict == SeparationVerdict.DISTINCT:
            return self._ok(f"{report.verdict} at {report.separating_point}")
        return self._no(str(report.verdict))

    def _help(self, arguments: ArgumentSlice) -> CommandResult:
        return self._ok("commands:", *HELP_LINES.values())
