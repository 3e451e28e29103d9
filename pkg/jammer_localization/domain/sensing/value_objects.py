"""Collection of Value Objects for the Sensing domain of the Jammer Localization application."""

import math
from dataclasses import dataclass, field
from typing import Optional, Union

from jammer_localization.domain.channel.value_objects import PathLossModel
from jammer_localization.domain.common import Dbm, Decibels, JammerId, Meters, ValueObject
from jammer_localization.domain.geometry.value_objects import AnglePair, Position3
from jammer_localization.domain.sensing.common import AttributionKind, LeanCase
from jammer_localization.domain.sensing.exceptions import SensingConfigurationError


@dataclass(frozen=True)
class AoaSample(ValueObject):
    """
    One AoA measurement as a localizer sees it.

    `attributed_jammer_id` is simulation ground truth; localizers must not read it.
    """

    reported_uav_position: Position3
    angles: AnglePair
    jsr_db: Decibels
    time_s: float
    attributed_jammer_id: JammerId = JammerId(0)

    def __post_init__(self):
        if self.time_s < 0:
            raise SensingConfigurationError(f"Sample time must be non-negative, got {self.time_s}")


@dataclass(frozen=True)
class AoaErrorModel(ValueObject):
    """
    Mapping from effective JSR to AoA error power (deg^2).

    sigma_d = clamp(sigma_ref * 10^(-slope * (jsr - jsr_ref) / 10), sigma_min, sigma_max) * scale
    """

    sigma_ref_deg2: float = 1.0
    jsr_ref_db: Decibels = Decibels(10.0)
    slope: float = 1.0
    sigma_min_deg2: float = 0.01
    sigma_max_deg2: float = 100.0
    scale: float = 1.0

    def __post_init__(self):
        if self.sigma_ref_deg2 < 0:
            raise SensingConfigurationError("Reference error power must be non-negative")
        if self.slope < 0:
            raise SensingConfigurationError("Error curve slope must be non-negative")
        if not 0 <= self.sigma_min_deg2 <= self.sigma_max_deg2:
            raise SensingConfigurationError(
                f"Error power bounds must satisfy 0 <= min <= max, got [{self.sigma_min_deg2}, {self.sigma_max_deg2}]"
            )
        if not (self.scale >= 0 and math.isfinite(self.scale)):
            raise SensingConfigurationError("Error scale must be non-negative and finite")

    @classmethod
    def noiseless(cls) -> "AoaErrorModel":
        """An error model that never perturbs the bearings."""
        return cls(scale=0.0)


@dataclass(frozen=True)
class PhysicalDominant(ValueObject):
    """The strongest received jamming component is the one resolved."""

    @property
    def kind(self) -> AttributionKind:
        return AttributionKind.PHYSICAL_DOMINANT


@dataclass(frozen=True)
class DirectProbability(ValueObject):
    """Jammer A is resolved with probability p_a, the others share the rest equally."""

    p_a: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.p_a <= 1.0:
            raise SensingConfigurationError(f"Attribution probability must be in [0, 1], got {self.p_a}")

    @property
    def kind(self) -> AttributionKind:
        return AttributionKind.DIRECT_PROBABILITY


AttributionMode = Union[PhysicalDominant, DirectProbability]


STRONG_LEAN_OFFSET_M = Meters(5.0)
SLIGHT_LEAN_OFFSET_M = Meters(25.0)


@dataclass(frozen=True)
class LeanSpec(ValueObject):
    """
    Where the UAV cruises relative to jammer A.

    With an offset, waypoints are drawn in a square of side 2 * half_extent_m
    (full cruising height range) centered `offset_m` away from jammer A in a
    random horizontal direction.
    """

    offset_m: Optional[Meters] = None
    half_extent_m: Meters = Meters(30.0)

    def __post_init__(self):
        if self.offset_m is not None and self.offset_m < 0:
            raise SensingConfigurationError("Lean offset must be non-negative")
        if self.half_extent_m <= 0:
            raise SensingConfigurationError("Lean half extent must be positive")

    @classmethod
    def none(cls) -> "LeanSpec":
        return cls()

    @classmethod
    def strong(cls) -> "LeanSpec":
        return cls(offset_m=STRONG_LEAN_OFFSET_M)

    @classmethod
    def slight(cls) -> "LeanSpec":
        return cls(offset_m=SLIGHT_LEAN_OFFSET_M)

    @classmethod
    def from_case(cls, case: LeanCase) -> "LeanSpec":
        """Returns the preset for a named lean case."""
        return {LeanCase.NONE: cls.none, LeanCase.STRONG: cls.strong, LeanCase.SLIGHT: cls.slight}[case]()


@dataclass(frozen=True)
class SensingNoise(ValueObject):
    """Everything that corrupts a measurement besides the jammers themselves."""

    signal_dbm: Dbm = Dbm(-15.0)
    path_loss: PathLossModel = field(default_factory=PathLossModel)
    aoa_error: AoaErrorModel = field(default_factory=AoaErrorModel)
    position_error_power: float = 3.0  # sigma_p, m^2

    def __post_init__(self):
        if self.position_error_power < 0:
            raise SensingConfigurationError("Position error power must be non-negative")
