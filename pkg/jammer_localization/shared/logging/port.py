"""Log Port"""

from abc import ABC, abstractmethod


class LoggerPort(ABC):
    """
    Port for the Logger.

    Implementations must never write to stdout: the CLI reserves it for the
    paths of the result files.
    """

    @abstractmethod
    def default_log(self):
        """(Re)configure the sinks for the current level."""
        raise NotImplementedError

    @abstractmethod
    def debug(self, msg):
        """Per-point aggregates, resolved configuration, per-trial failures."""
        raise NotImplementedError

    @abstractmethod
    def info(self, msg):
        """Sweep progress and written files."""
        raise NotImplementedError

    @abstractmethod
    def warning(self, msg):
        """Recoverable problems, e.g. localizer failures in a sweep."""
        raise NotImplementedError

    @abstractmethod
    def error(self, msg):
        """Logs an ERROR message"""
        raise NotImplementedError

    @abstractmethod
    def critical(self, msg):
        """Logs a CRITICAL message"""
        raise NotImplementedError

    @abstractmethod
    def log(self, msg, level="DEBUG"):
        """Log a message; dicts and lists are rendered as JSON."""
        raise NotImplementedError

    @abstractmethod
    def shutdown(self):
        """Flush pending records before exiting."""
        raise NotImplementedError
