"""Shared objects for infrastructure layer of Jammer Localization application."""

from dataclasses import dataclass

from jammer_localization.application.interfaces import ExperimentServiceInterface, SimulationServiceInterface
from jammer_localization.shared.settings.settings import AppSettings


@dataclass(frozen=True)
class Services:
    """Service layer adapters"""

    simulation_service: SimulationServiceInterface
    experiment_service: ExperimentServiceInterface
    settings: AppSettings
