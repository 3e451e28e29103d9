"""Bootstrap operations"""

from typing import Optional

from jammer_localization.adapters.domain.localization.factory import LocalizerFactory
from jammer_localization.application.services.experiment_service import ExperimentService
from jammer_localization.application.services.simulation_service import SimulationService
from jammer_localization.shared.infrastructure import Services
from jammer_localization.shared.logging.port import LoggerPort
from jammer_localization.shared.settings.settings import AppSettings


def configure_dependencies(
    logger: LoggerPort,
    settings: AppSettings,
    threads: Optional[int] = None,
) -> Services:
    """
    Performs Dependency Injection - Creates instances of adapters and services.
    Returns the main application services.

    `threads` overrides the worker count from the settings.
    """

    logger.debug("Configuring dependencies...")

    # --- Factories ---
    localizer_factory = LocalizerFactory()

    logger.debug("Instantiating application services...")

    simulation_service = SimulationService(
        localizer_factory=localizer_factory,
        threads=threads if threads is not None else settings.threads,
        backend=settings.parallel_backend,
        logger=logger,
    )

    experiment_service = ExperimentService(simulation_service=simulation_service, logger=logger)

    services = Services(
        simulation_service=simulation_service,
        experiment_service=experiment_service,
        settings=settings,
    )

    logger.debug("Dependency configuration complete.")
    return services
