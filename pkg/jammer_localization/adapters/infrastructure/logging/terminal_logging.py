"""The terminal log."""

import json
import sys
import traceback
from pathlib import Path
from pprint import pformat
from typing import Optional

from loguru import logger

from jammer_localization.shared.logging.port import LoggerPort

LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")
TERMINAL_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss}</green> | <level>{level: <8}</level> | "
    "<cyan>{extra[component]}</cyan> | <level>{message}</level>"
)
FILE_FORMAT = "{time:YYYY-MM-DDTHH:mm:ss.SSSZ} | {level: <8} | {extra[component]} | {message}"


class TerminalLogger(LoggerPort):
    """
    Terminal logger class.

    Logs go to stderr so that stdout carries only the paths of the written
    result files. An optional log file receives the same records uncolored.
    """

    def __init__(self, name: str = "jamloc", log_level: str = "INFO", log_file: Optional[str] = None):
        level = log_level.upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"Unknown log level '{log_level}', expected one of {', '.join(LOG_LEVELS)}")

        self.name = name
        self.log_level = level
        self.log_file = Path(log_file) if log_file else None
        self._logger = logger.bind(component=name)
        self.default_log()

    def default_log(self):
        """Route every record to stderr and, if configured, to the log file."""
        logger.remove()

        logger.add(
            sys.stderr,
            level=self.log_level,
            format=TERMINAL_FORMAT,
            colorize=True,
            backtrace=False,
            diagnose=False,
        )
        if self.log_file is not None:
            logger.add(
                self.log_file,
                level=self.log_level,
                format=FILE_FORMAT,
                colorize=False,
                encoding="utf-8",
                enqueue=True,
            )

    def __call__(self, msg, level="DEBUG"):
        """Alias of self.log()"""
        self.log(msg, level)

    def debug(self, msg):
        """Logs a DEBUG message"""
        self.log(msg, level="DEBUG")

    def info(self, msg):
        """Logs an INFO message"""
        self.log(msg, level="INFO")

    def warning(self, msg):
        """Logs a WARNING message"""
        self.log(msg, level="WARNING")

    def error(self, msg):
        """Logs an ERROR message"""
        self.log(msg, level="ERROR")

        if sys.exc_info()[0] is not None:
            traceback.print_exc()

    def critical(self, msg):
        """Logs a CRITICAL message"""
        self.log(msg, level="CRITICAL")

        if sys.exc_info()[0] is not None:
            traceback.print_exc()

    @staticmethod
    def render(msg) -> str:
        """Strings pass through, dicts and lists become indented JSON, anything else is pretty-printed."""
        if isinstance(msg, str):
            return msg
        if type(msg) in (dict, list):
            try:
                return json.dumps(msg, indent=4, default=str)
            except (TypeError, ValueError):
                return pformat(msg)
        return pformat(msg)

    def log(self, msg, level="DEBUG"):
        """Log a message"""
        name = level.upper() if level.upper() in LOG_LEVELS else "DEBUG"
        # Curly braces in rendered JSON must not be taken as format fields
        self._logger.opt(depth=1).log(name, "{}", self.render(msg))

    def shutdown(self):
        """Sure that log are written before exiting."""
        logger.complete()
