from functools import wraps
import inspect
import logging
from logging import LogRecord, Logger
from types import FrameType
from typing import Callable

from expgroups.utilities.processing_context import LoggingCallerInfo


def logging_decorator(
    level=logging.DEBUG,
    *,
    message: str | None = None,
) -> Callable:
    """
    A decorator that logs calls to the decorated function with the caller's location.

    The record is attributed to the module, file and line that called the decorated function, not to this
    module. Frame inspection only happens when the caller's logger is enabled for `level`, so decorated engine
    operations cost nothing extra while logging is off.

    Args:
        - `level` (int): The logging level. Defaults to logging.DEBUG.
        - `message` (str | None): Custom log message. If None, a default message naming the function is used.

    Returns:
        - `Callable`: The decorated function.

    Example:
        ```Python
        @logging_decorator(level=logging.INFO, message="Normalizing expression")
        def normalize(expr):
            pass
        ```
    """

    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            frame: FrameType | None = inspect.currentframe()
            caller_frame: FrameType | None = frame.f_back if frame else None
            if caller_frame is not None:
                caller_info: LoggingCallerInfo = _get_caller_info(caller_frame)
                logger: Logger = _get_logger(caller_info.caller_module_name)
                if logger.isEnabledFor(level):
                    log_message: str = (
                        message if message else f"Calling function: {func.__name__}"
                    )
                    logger.handle(
                        _gather_log_record_context(caller_info, level, log_message)
                    )
            del frame, caller_frame

            return func(*args, **kwargs)

        return wrapper

    return decorator


def _gather_log_record_context(
    caller_info: LoggingCallerInfo, level: int, msg: str
) -> LogRecord:
    """Creates and returns a LogRecord with specified context information."""

    return logging.LogRecord(
        name=caller_info.caller_module_name,
        level=level,
        pathname=caller_info.caller_file_path,
        lineno=caller_info.caller_line_no,
        msg=msg,
        args=None,
        exc_info=None,
    )


def _get_caller_info(frame: FrameType) -> LoggingCallerInfo:
    """Extracts and returns caller information from a frame object."""

    caller_file_path: str = frame.f_code.co_filename
    caller_module_name: str = frame.f_globals.get(
        "__name__", caller_file_path.split("/")[-1].split(".")[0]
    )
    return LoggingCallerInfo(caller_module_name, caller_file_path, frame.f_lineno)


def _get_logger(caller_module_name: str) -> Logger:
    """Retrieves and returns a Logger instance for the specified module name."""

    return logging.getLogger(caller_module_name)
