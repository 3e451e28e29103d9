"""CLI commands for the simulation domain: the experiment presets and custom runs."""

from datetime import datetime, timezone
from typing import Any, Callable, Dict, Optional

import click
import pandas as pd

from jammer_localization import __version__
from jammer_localization.adapters.domain.simulation.loader import apply_overrides, load_document
from jammer_localization.adapters.domain.simulation.schemas import RunManifestSchema, ScenarioDocumentSchema
from jammer_localization.adapters.domain.simulation.writers import (
    complexity_frame,
    csv_path,
    experiment_frame,
    manifest_path,
    write_results,
)
from jammer_localization.adapters.infrastructure.cli.utils import GlobalOptions, translate_errors
from jammer_localization.domain.sensing.common import LeanCase
from jammer_localization.domain.simulation.common import FrequencyMode, ModulationSweep
from jammer_localization.domain.simulation.value_objects import ScenarioConfig
from jammer_localization.shared.infrastructure import Services
from jammer_localization.shared.logging.port import LoggerPort

FrameProducer = Callable[[Services, ScenarioConfig, ScenarioDocumentSchema], pd.DataFrame]

BOTH = "both"
ALL_JAMMER_COUNTS = "all"


def run_preset(ctx: click.Context, name: str, produce: FrameProducer, options: Optional[Dict[str, Any]] = None):
    """
    Load the scenario, run one experiment and write `<name>.csv` plus its manifest.

    Nothing is written unless the whole experiment completed.
    """
    services: Services = ctx.obj[Services]
    logger: LoggerPort = ctx.obj[LoggerPort]
    global_options: GlobalOptions = ctx.obj[GlobalOptions]

    with translate_errors(logger):
        loaded = load_document(global_options.config)
        document = apply_overrides(loaded.document, master_seed=global_options.seed, trials=global_options.trials)
        cfg = document.scenario.to_model()

        if loaded.manifest:
            logger.info(
                f"Replaying the '{loaded.manifest.command}' manifest written {loaded.manifest.finished_at.isoformat()}"
            )
        if document.sweep and name != "run":
            logger.warning(f"The '{name}' preset defines its own grids; the sweep in the config is ignored.")
        logger.debug(document.model_dump(mode="json"))

        started_at = datetime.now(timezone.utc)
        frame = produce(services, cfg, document)
        finished_at = datetime.now(timezone.utc)

        out_dir = global_options.out_dir
        manifest = RunManifestSchema(
            package_version=__version__,
            command=name,
            options=options or {},
            master_seed=cfg.master_seed,
            started_at=started_at,
            finished_at=finished_at,
            outputs=[str(csv_path(out_dir, name)), str(manifest_path(out_dir, name))],
            config=document,
        )
        written = write_results(out_dir, name, frame, manifest)

    logger.info(f"{name}: {len(frame)} rows in {(finished_at - started_at).total_seconds():.1f} s")
    for path in written:
        click.echo(str(path))


@click.command("ideal")
@click.pass_context
def ideal(ctx: click.Context):
    """Single jammer: sample count x peak power grid."""

    def produce(services: Services, cfg: ScenarioConfig, _: ScenarioDocumentSchema) -> pd.DataFrame:
        return experiment_frame(services.experiment_service.ideal(cfg))

    run_preset(ctx, "ideal", produce)


@click.command("multi")
@click.option(
    "--lean",
    type=click.Choice([LeanCase.STRONG.value, LeanCase.SLIGHT.value, BOTH]),
    default=BOTH,
    show_default=True,
    help="How far the cruising area leans toward the target jammer",
)
@click.option(
    "--jammers",
    type=click.Choice(["2", "3", ALL_JAMMER_COUNTS]),
    default=ALL_JAMMER_COUNTS,
    show_default=True,
    help="Number of jammers M",
)
@click.pass_context
def multi(ctx: click.Context, lean: str, jammers: str):
    """Several jammers: attribution probability sweep per jammer count and lean case."""
    lean_cases = (LeanCase.STRONG, LeanCase.SLIGHT) if lean == BOTH else (LeanCase(lean),)
    jammer_counts = (2, 3) if jammers == ALL_JAMMER_COUNTS else (int(jammers),)

    def produce(services: Services, cfg: ScenarioConfig, _: ScenarioDocumentSchema) -> pd.DataFrame:
        return experiment_frame(
            services.experiment_service.multi(cfg, lean_cases=lean_cases, jammer_counts=jammer_counts)
        )

    run_preset(ctx, "multi", produce, options={"lean": lean, "jammers": jammers})


@click.command("modulation")
@click.option(
    "--sweep",
    type=click.Choice([ModulationSweep.PHASE.value, ModulationSweep.WINDOW.value, BOTH]),
    default=BOTH,
    show_default=True,
)
@click.option(
    "--freq-mode",
    type=click.Choice([FrequencyMode.CONSTANT.value, FrequencyMode.RANDOM.value, BOTH]),
    default=BOTH,
    show_default=True,
    help="Keep the modulation frequency or scale it by b ~ U(0, 2) per trial",
)
@click.pass_context
def modulation(ctx: click.Context, sweep: str, freq_mode: str):
    """Power-modulated jammer pair: phase offset and measurement window sweeps."""
    sweeps = tuple(ModulationSweep) if sweep == BOTH else (ModulationSweep(sweep),)
    freq_modes = (FrequencyMode.CONSTANT, FrequencyMode.RANDOM) if freq_mode == BOTH else (FrequencyMode(freq_mode),)

    def produce(services: Services, cfg: ScenarioConfig, _: ScenarioDocumentSchema) -> pd.DataFrame:
        return experiment_frame(services.experiment_service.modulation(cfg, sweeps=sweeps, freq_modes=freq_modes))

    run_preset(ctx, "modulation", produce, options={"sweep": sweep, "freq_mode": freq_mode})


@click.command("run")
@click.pass_context
def run(ctx: click.Context):
    """Fully configured scenario, optionally swept along one parameter."""

    def produce(services: Services, cfg: ScenarioConfig, document: ScenarioDocumentSchema) -> pd.DataFrame:
        sweep = document.sweep.to_model() if document.sweep else None
        return experiment_frame(services.experiment_service.custom(cfg, sweep))

    run_preset(ctx, "run", produce)


@click.command("complexity")
@click.pass_context
def complexity(ctx: click.Context):
    """Work and wall-clock time of every localizer against the sample count."""

    def produce(services: Services, cfg: ScenarioConfig, _: ScenarioDocumentSchema) -> pd.DataFrame:
        return complexity_frame(services.experiment_service.complexity(cfg))

    run_preset(ctx, "complexity", produce)
