"""Jammer Localization Application Interfaces Module"""

from abc import ABC, abstractmethod
from typing import List, Optional, Sequence

from jammer_localization.domain.localization.common import LocalizationMethod
from jammer_localization.domain.localization.services import Localizer
from jammer_localization.domain.localization.value_objects import SpgdParams
from jammer_localization.domain.sensing.common import LeanCase
from jammer_localization.domain.simulation.common import FrequencyMode, ModulationSweep
from jammer_localization.domain.simulation.value_objects import (
    ExperimentResult,
    ScenarioConfig,
    SweepReport,
    SweepSpec,
    TrialResult,
    WorkAggregate,
)


class SimulationServiceInterface(ABC):
    """Interface for the Monte Carlo simulation service."""

    @abstractmethod
    def run_trials(self, cfg: ScenarioConfig) -> List[TrialResult]:
        """Run cfg.trials trials and return them in trial-index order."""

    @abstractmethod
    def run_sweep(self, cfg: ScenarioConfig, sweep: Optional[SweepSpec] = None) -> SweepReport:
        """Run every grid point of a sweep (or the plain config) and aggregate per method."""


class ExperimentServiceInterface(ABC):
    """Interface for the experiment presets."""

    @abstractmethod
    def ideal(self, cfg: ScenarioConfig) -> ExperimentResult:
        """Single jammer, sample count x peak power grid."""

    @abstractmethod
    def multi(
        self,
        cfg: ScenarioConfig,
        lean_cases: Sequence[LeanCase] = (LeanCase.STRONG, LeanCase.SLIGHT),
        jammer_counts: Sequence[int] = (2, 3),
    ) -> ExperimentResult:
        """Several jammers, attribution probability sweep per jammer count and lean case."""

    @abstractmethod
    def modulation(
        self,
        cfg: ScenarioConfig,
        sweeps: Sequence[ModulationSweep] = tuple(ModulationSweep),
        freq_modes: Sequence[FrequencyMode] = tuple(FrequencyMode),
    ) -> ExperimentResult:
        """Power-modulated jammer pair, phase and measurement-window sweeps."""

    @abstractmethod
    def custom(self, cfg: ScenarioConfig, sweep: Optional[SweepSpec] = None) -> ExperimentResult:
        """Fully configured run, optionally swept along one parameter."""

    @abstractmethod
    def complexity(self, cfg: ScenarioConfig, sample_counts: Sequence[int]) -> List[WorkAggregate]:
        """Mean work and runtime of every method per sample count."""


class LocalizerFactoryInterface(ABC):
    """Base interface for Localizer factories in the Jammer Localization application."""

    @abstractmethod
    def create(
        self,
        method: LocalizationMethod,
        path_loss_exponent: float = 2.0,
        spgd_params: SpgdParams = SpgdParams(),
    ) -> Localizer:
        """Create a localizer for one method."""

    @abstractmethod
    def create_all(
        self,
        methods: Sequence[LocalizationMethod] = tuple(LocalizationMethod),
        path_loss_exponent: float = 2.0,
        spgd_params: SpgdParams = SpgdParams(),
    ) -> List[Localizer]:
        """Create one localizer per method, in the given order."""
