"""Collection of Value Objects for the Simulation domain of the Jammer Localization application."""

from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple, Union

from jammer_localization.domain.channel.value_objects import (
    JammerSpec,
    JammerTemplate,
    PathLossModel,
    SinusoidalModulation,
)
from jammer_localization.domain.common import Dbm, Meters, Seconds, ValueObject
from jammer_localization.domain.geometry.value_objects import Box, Position3
from jammer_localization.domain.localization.common import LocalizationMethod
from jammer_localization.domain.localization.value_objects import Estimate, SpgdParams
from jammer_localization.domain.sensing.value_objects import (
    AoaErrorModel,
    AttributionMode,
    LeanSpec,
    PhysicalDominant,
    SensingNoise,
)
from jammer_localization.domain.simulation.common import ErrorMetric, SweepParameter
from jammer_localization.domain.simulation.exceptions import ScenarioConfigurationError

MAX_SEED = 2**64


def _default_cruising_area() -> Box:
    return Box(Position3(0.0, 0.0, 5.0), Position3(100.0, 100.0, 25.0))


def _default_jammer_area() -> Box:
    return Box(Position3(40.0, 40.0, 12.0), Position3(60.0, 60.0, 18.0))


@dataclass(frozen=True)
class ScenarioConfig(ValueObject):
    """Everything one Monte Carlo run needs; defaults reproduce the ideal-scenario setup."""

    cruising_area: Box = field(default_factory=_default_cruising_area)
    jammer_area: Box = field(default_factory=_default_jammer_area)
    other_jammer_area: Optional[Box] = None  # None: the cruising area
    jammers: Tuple[JammerTemplate, ...] = (JammerTemplate(),)
    signal_power_dbm: Dbm = Dbm(-15.0)
    n_samples: int = 20
    path_loss: PathLossModel = field(default_factory=PathLossModel)
    aoa_error: AoaErrorModel = field(default_factory=AoaErrorModel)
    position_error_power: float = 3.0
    attribution: AttributionMode = field(default_factory=PhysicalDominant)
    lean: LeanSpec = field(default_factory=LeanSpec)
    measurement_window_s: Seconds = Seconds(1.0)
    window_start_span_s: Optional[Seconds] = None
    min_jammer_separation_m: Meters = Meters(20.0)
    spgd: SpgdParams = field(default_factory=SpgdParams)
    trials: int = 500
    master_seed: int = 1
    error_metric: ErrorMetric = ErrorMetric.RMSE

    def __post_init__(self):
        if not self.jammers:
            raise ScenarioConfigurationError("At least one jammer is required")
        if self.n_samples < 2:
            raise ScenarioConfigurationError(f"n_samples must be >= 2, got {self.n_samples}")
        if self.trials < 1:
            raise ScenarioConfigurationError(f"trials must be >= 1, got {self.trials}")
        if not 0 <= self.master_seed < MAX_SEED:
            raise ScenarioConfigurationError(f"master_seed must be an unsigned 64-bit integer, got {self.master_seed}")
        if self.measurement_window_s < 0:
            raise ScenarioConfigurationError("measurement_window_s must be non-negative")
        if self.window_start_span_s is not None and self.window_start_span_s < 0:
            raise ScenarioConfigurationError("window_start_span_s must be non-negative")
        if self.min_jammer_separation_m < 0:
            raise ScenarioConfigurationError("min_jammer_separation_m must be non-negative")
        if self.position_error_power < 0:
            raise ScenarioConfigurationError("position_error_power must be non-negative")
        if self.cruising_area.is_degenerate:
            raise ScenarioConfigurationError(f"Cruising area {self.cruising_area} is degenerate")

    @property
    def placement_area(self) -> Box:
        """Box the non-A jammers are placed in."""
        return self.other_jammer_area if self.other_jammer_area is not None else self.cruising_area

    @property
    def noise(self) -> SensingNoise:
        return SensingNoise(
            signal_dbm=self.signal_power_dbm,
            path_loss=self.path_loss,
            aoa_error=self.aoa_error,
            position_error_power=self.position_error_power,
        )

    @property
    def reference_period_s(self) -> Optional[Seconds]:
        """Period T of the first sinusoidally modulated jammer, if any."""
        for template in self.jammers:
            if isinstance(template.modulation, SinusoidalModulation):
                return template.modulation.period_s
        return None

    @property
    def start_span_s(self) -> Seconds:
        """
        Width of the interval the measurement window start is drawn from.

        Defaults to the longest modulation period so every phase is equally
        likely, falling back to the window itself.
        """
        if self.window_start_span_s is not None:
            return self.window_start_span_s
        periods = [t.modulation.period_s for t in self.jammers if isinstance(t.modulation, SinusoidalModulation)]
        return Seconds(max(periods)) if periods else self.measurement_window_s


@dataclass(frozen=True)
class RealizedScene(ValueObject):
    """The per-trial draw of jammer positions, powers and the window start."""

    jammers: Tuple[JammerSpec, ...]
    window_start_s: Seconds

    @property
    def target(self) -> Position3:
        """True position of jammer A."""
        return self.jammers[0].position


@dataclass(frozen=True)
class TrialResult(ValueObject):
    """Outcome of one trial: per-method estimates, errors and failures."""

    trial_index: int
    true_position: Position3
    estimates: Mapping[LocalizationMethod, Estimate] = field(default_factory=dict)
    errors: Mapping[LocalizationMethod, float] = field(default_factory=dict)
    failures: Mapping[LocalizationMethod, str] = field(default_factory=dict)
    runtimes_s: Mapping[LocalizationMethod, float] = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return bool(self.failures)


@dataclass(frozen=True)
class SweepSpec(ValueObject):
    """One scenario parameter and the grid of values it takes."""

    parameter: SweepParameter
    values: Tuple[float, ...]

    def __post_init__(self):
        if not self.values:
            raise ScenarioConfigurationError(f"Sweep grid for {self.parameter.value} is empty")


@dataclass(frozen=True)
class MethodAggregate(ValueObject):
    """Error summary of one method at one grid point."""

    method: LocalizationMethod
    error_m: float  # RMSE or MAE, NaN when no trial succeeded
    ci95_m: float
    trials: int
    failures: int


@dataclass(frozen=True)
class SweepPoint(ValueObject):
    """Aggregates at one grid value (None for a single-point run)."""

    value: Optional[float]
    aggregates: Tuple[MethodAggregate, ...]


@dataclass(frozen=True)
class SweepReport(ValueObject):
    """Per-(grid point, method) aggregates of a sweep."""

    parameter: Optional[SweepParameter]
    points: Tuple[SweepPoint, ...]
    metric: ErrorMetric = ErrorMetric.RMSE


Label = Union[str, int, float, None]


@dataclass(frozen=True)
class LabeledReport(ValueObject):
    """A sweep report tagged with the experiment labels that produced it."""

    labels: Dict[str, Label]
    value_column: str
    report: SweepReport


@dataclass(frozen=True)
class ExperimentResult(ValueObject):
    """All series of one experiment preset, with the output column order."""

    name: str
    columns: Tuple[str, ...]
    series: Tuple[LabeledReport, ...]


@dataclass(frozen=True)
class WorkAggregate(ValueObject):
    """Mean computational work of one method at one sample count."""

    n_samples: int
    method: LocalizationMethod
    mean_samples_used: float
    mean_work_units: float
    work_bound: float
    mean_runtime_us: float
