import logging

from rich.logging import RichHandler


def setup_logging(level=logging.INFO) -> None:
    """
    Configures the logging system to render through `RichHandler`.

    Args:
        - `level` (int, optional): The logging level for the root logger. Defaults to logging.INFO.

    Example:
        ```Python
        setup_logging(logging.DEBUG)
        # Configures logging at DEBUG level with rich output.
        ```
    """

    format_str = "%(message)s"
    logging.basicConfig(
        level=level,
        format=format_str,
        handlers=[RichHandler(markup=True, show_path=False)],
        force=True,
    )


def level_from_verbosity(verbose: bool, quiet: bool = False) -> int:
    """Maps the CLI verbosity flags to a logging level."""

    if quiet:
        return logging.ERROR
    return logging.DEBUG if verbose else logging.WARNING
