"""
Jammer Localization CLI Setup.
"""

from pathlib import Path
from typing import Optional

import click

from jammer_localization.adapters.infrastructure.cli.utils import GlobalOptions
from jammer_localization.adapters.infrastructure.logging.terminal_logging import TerminalLogger
from jammer_localization.bootstrap import configure_dependencies
from jammer_localization.domain.simulation.value_objects import MAX_SEED
from jammer_localization.shared.infrastructure import Services
from jammer_localization.shared.logging.port import LoggerPort
from jammer_localization.shared.settings.settings import AppSettings


@click.group()
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="Scenario file (JSON or YAML) or a run manifest to replay",
)
@click.option("--seed", type=click.IntRange(0, MAX_SEED - 1), default=None, help="Master seed (overrides the config)")
@click.option("--trials", type=click.IntRange(min=1), default=None, help="Trials per grid point (overrides the config)")
@click.option("--threads", type=click.IntRange(min=1), default=None, help="Trial workers")
@click.option(
    "--out",
    "out_dir",
    type=click.Path(file_okay=False, path_type=Path),
    default=None,
    help="Output directory for CSV and manifest files",
)
@click.pass_context
def cli(
    ctx: click.Context,
    config_path: Optional[Path],
    seed: Optional[int],
    trials: Optional[int],
    threads: Optional[int],
    out_dir: Optional[Path],
):
    """Jammer localization experiments"""

    if not isinstance(ctx.obj, dict):
        ctx.obj = {}

    logger = ctx.obj.get(LoggerPort)
    services = ctx.obj.get(Services)

    if not isinstance(logger, LoggerPort):
        settings = services.settings if isinstance(services, Services) else AppSettings()
        logger = TerminalLogger(log_level=settings.log_level, log_file=settings.log_file)
        ctx.obj[LoggerPort] = logger

    # The worker count is fixed when the services are built
    if not isinstance(services, Services) or threads is not None:
        settings = services.settings if isinstance(services, Services) else AppSettings()
        services = configure_dependencies(logger, settings, threads=threads)
        ctx.obj[Services] = services

    ctx.obj[GlobalOptions] = GlobalOptions(
        config=config_path,
        seed=seed,
        trials=trials,
        threads=threads,
        out_dir=out_dir if out_dir is not None else Path(services.settings.output_dir),
    )
