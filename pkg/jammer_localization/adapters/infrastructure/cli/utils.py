"""Utility functions for CLI commands."""

from contextlib import contextmanager
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional

import click

from jammer_localization.domain.exceptions import ConfigurationError, DomainError
from jammer_localization.shared.logging.port import LoggerPort


@dataclass(frozen=True)
class GlobalOptions:
    """Options given to the root group, shared by every subcommand."""

    config: Optional[Path] = None
    seed: Optional[int] = None
    trials: Optional[int] = None
    threads: Optional[int] = None
    out_dir: Path = Path("results")


@contextmanager
def translate_errors(logger: Optional[LoggerPort] = None) -> Iterator[None]:
    """Map domain failures onto click exit codes: 2 for bad configuration, 1 otherwise."""
    try:
        yield
    except ConfigurationError as e:
        raise click.UsageError(f"Invalid configuration: {e}") from e
    except DomainError as e:
        if logger:
            logger.error(f"Simulation failed: {e}")
        raise click.ClickException(str(e)) from e
    except OSError as e:
        if logger:
            logger.error(f"I/O failure: {e}")
        raise click.ClickException(f"Cannot write results: {e}") from e
