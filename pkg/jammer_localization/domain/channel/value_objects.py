"""Collection of Value Objects for the Channel domain of the Jammer Localization application."""

import math
from dataclasses import dataclass, field
from typing import Optional, Tuple, Union

from jammer_localization.domain.channel.common import FrequencyJitter, ModulationKind
from jammer_localization.domain.channel.exceptions import ChannelConfigurationError
from jammer_localization.domain.common import Decibels, Dbm, JammerId, Meters, Radians, Seconds, ValueObject
from jammer_localization.domain.geometry.value_objects import AnglePair, Position3


@dataclass(frozen=True)
class PathLossModel(ValueObject):
    """Log-distance path loss with log-normal shadowing."""

    reference_distance_m: Meters = Meters(1.0)
    path_loss_exponent: float = 2.0
    shadowing_std_db: Decibels = Decibels(2.0)  # standard deviation of X_sigma, in dB

    def __post_init__(self):
        if self.reference_distance_m <= 0:
            raise ChannelConfigurationError("Reference distance must be positive")
        if self.path_loss_exponent <= 0:
            raise ChannelConfigurationError("Path loss exponent must be positive")
        if self.shadowing_std_db < 0:
            raise ChannelConfigurationError("Shadowing standard deviation must be non-negative")


@dataclass(frozen=True)
class AntennaPattern(ValueObject):
    """Directional jammer antenna: cosine-power main lobe with a gain floor."""

    boresight: Position3 = field(default_factory=lambda: Position3(-1.0, 0.0, 0.0))
    dynamic_range_db: Decibels = Decibels(20.0)
    beam_shape_exponent: float = 10.0

    def __post_init__(self):
        if abs(self.boresight.norm() - 1.0) > 1e-9:
            raise ChannelConfigurationError(f"Boresight must be a unit vector, got {self.boresight}")
        if self.dynamic_range_db <= 0:
            raise ChannelConfigurationError("Dynamic range must be positive")
        if self.beam_shape_exponent <= 0:
            raise ChannelConfigurationError("Beam shape exponent must be positive")


@dataclass(frozen=True)
class ConstantModulation(ValueObject):
    """Constant main-lobe transmit power."""

    peak_dbm: Dbm

    @property
    def kind(self) -> ModulationKind:
        return ModulationKind.CONSTANT


@dataclass(frozen=True)
class RandomUniformModulation(ValueObject):
    """Transmit power redrawn from U(low, high) at every measurement instant."""

    low_dbm: Dbm
    high_dbm: Dbm

    def __post_init__(self):
        if self.low_dbm > self.high_dbm:
            raise ChannelConfigurationError(f"Random modulation low {self.low_dbm} exceeds high {self.high_dbm}")

    @property
    def kind(self) -> ModulationKind:
        return ModulationKind.RANDOM_UNIFORM


@dataclass(frozen=True)
class SinusoidalModulation(ValueObject):
    """
    Transmit power mean + amplitude * sin(2*pi*t/T_eff + phase).

    `frequency_factor` is the per-trial draw b of the frequency jitter; the
    effective period is T / b. Templates keep it at 1.
    """

    mean_dbm: Dbm
    amplitude_db: Decibels
    period_s: Seconds
    phase_rad: Radians = Radians(0.0)
    frequency_jitter: FrequencyJitter = FrequencyJitter.NONE
    frequency_factor: float = 1.0

    def __post_init__(self):
        if self.amplitude_db < 0:
            raise ChannelConfigurationError("Sinusoidal amplitude must be non-negative")
        if self.period_s <= 0:
            raise ChannelConfigurationError("Sinusoidal period must be positive")
        if not (self.frequency_factor > 0 and math.isfinite(self.frequency_factor)):
            raise ChannelConfigurationError("Frequency factor must be positive and finite")

    @property
    def kind(self) -> ModulationKind:
        return ModulationKind.SINUSOIDAL

    @property
    def effective_period_s(self) -> Seconds:
        return Seconds(self.period_s / self.frequency_factor)


ModulationScheme = Union[ConstantModulation, RandomUniformModulation, SinusoidalModulation]


@dataclass(frozen=True)
class JammerSpec(ValueObject):
    """A realized jammer: where it is, where it points, and how it modulates."""

    position: Position3
    antenna: AntennaPattern
    modulation: ModulationScheme
    id: JammerId = JammerId(0)


@dataclass(frozen=True)
class JammerTemplate(ValueObject):
    """
    Scenario-level description of a jammer, realized once per trial.

    When `peak_dbm_range` is set and the modulation is constant, the peak power
    is drawn uniformly from that range for every trial.
    """

    modulation: ModulationScheme = field(default_factory=lambda: ConstantModulation(Dbm(15.0)))
    peak_dbm_range: Optional[Tuple[float, float]] = (5.0, 25.0)
    boresight: AnglePair = field(default_factory=lambda: AnglePair(Radians(math.pi), Radians(0.0)))
    dynamic_range_db: Decibels = Decibels(20.0)
    beam_shape_exponent: float = 10.0

    def __post_init__(self):
        if self.peak_dbm_range is not None and self.peak_dbm_range[0] > self.peak_dbm_range[1]:
            raise ChannelConfigurationError(f"Peak power range {self.peak_dbm_range} is inverted")
