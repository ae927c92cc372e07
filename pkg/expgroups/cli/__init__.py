from expgroups.cli.parser import ExpressionParser
from expgroups.cli.session import Session

__all__ = ["ExpressionParser", "Session"]
