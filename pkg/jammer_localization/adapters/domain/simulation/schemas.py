"""
Validation schemas for scenario files and run manifests.

Angles are degrees in files and radians in the domain; the conversion
happens only in `to_model()`. Unknown keys are rejected everywhere.
"""

from datetime import datetime
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from typing_extensions import Annotated

from jammer_localization.domain.channel.common import FrequencyJitter
from jammer_localization.domain.channel.value_objects import (
    ConstantModulation,
    JammerTemplate,
    ModulationScheme,
    PathLossModel,
    RandomUniformModulation,
    SinusoidalModulation,
)
from jammer_localization.domain.common import Dbm, Decibels, Degrees, Meters, Seconds
from jammer_localization.domain.geometry.services import to_radians
from jammer_localization.domain.geometry.value_objects import AnglePair, Box, Position3
from jammer_localization.domain.localization.value_objects import SpgdParams
from jammer_localization.domain.sensing.value_objects import (
    AoaErrorModel,
    AttributionMode,
    DirectProbability,
    LeanSpec,
    PhysicalDominant,
)
from jammer_localization.domain.simulation.common import ErrorMetric, SweepParameter
from jammer_localization.domain.simulation.value_objects import ScenarioConfig, SweepSpec

Triple = Tuple[float, float, float]


class StrictSchema(BaseModel):
    """Base schema: unknown keys are errors."""

    model_config = ConfigDict(extra="forbid")


class BoxSchema(StrictSchema):
    """Axis-aligned box, [x, y, z] corners in meters."""

    low: Triple
    high: Triple

    @model_validator(mode="after")
    def validate_corners(self) -> "BoxSchema":
        """Ensure low <= high on every axis."""
        if any(lo > hi for lo, hi in zip(self.low, self.high)):
            raise ValueError(f"low corner {list(self.low)} exceeds high corner {list(self.high)}")
        return self

    def to_model(self) -> Box:
        """Convert BoxSchema to Box domain value object."""
        return Box(Position3(*self.low), Position3(*self.high))


class ConstantModulationSchema(StrictSchema):
    """Constant main-lobe power."""

    kind: Literal["constant"] = "constant"
    peak_dbm: float = Field(default=15.0, description="Main-lobe transmit power in dBm")

    def to_model(self) -> ConstantModulation:
        return ConstantModulation(Dbm(self.peak_dbm))


class RandomUniformModulationSchema(StrictSchema):
    """Power redrawn uniformly at every measurement."""

    kind: Literal["random_uniform"] = "random_uniform"
    low_dbm: float = 5.0
    high_dbm: float = 20.0

    @model_validator(mode="after")
    def validate_range(self) -> "RandomUniformModulationSchema":
        """Ensure low <= high."""
        if self.low_dbm > self.high_dbm:
            raise ValueError(f"low_dbm {self.low_dbm} exceeds high_dbm {self.high_dbm}")
        return self

    def to_model(self) -> RandomUniformModulation:
        return RandomUniformModulation(Dbm(self.low_dbm), Dbm(self.high_dbm))


class SinusoidalModulationSchema(StrictSchema):
    """mean + amplitude * sin(2 pi t / T + phase)."""

    kind: Literal["sinusoidal"] = "sinusoidal"
    mean_dbm: float = 12.5
    amplitude_db: float = Field(default=7.5, ge=0)
    period_s: float = Field(default=1.0, gt=0)
    phase_deg: float = 0.0
    frequency_jitter: FrequencyJitter = FrequencyJitter.NONE

    def to_model(self) -> SinusoidalModulation:
        return SinusoidalModulation(
            mean_dbm=Dbm(self.mean_dbm),
            amplitude_db=Decibels(self.amplitude_db),
            period_s=Seconds(self.period_s),
            phase_rad=to_radians(Degrees(self.phase_deg)),
            frequency_jitter=self.frequency_jitter,
        )


ModulationSchema = Annotated[
    Union[ConstantModulationSchema, RandomUniformModulationSchema, SinusoidalModulationSchema],
    Field(discriminator="kind"),
]


class JammerSchema(StrictSchema):
    """One jammer template."""

    modulation: ModulationSchema = Field(default_factory=ConstantModulationSchema)
    peak_dbm_range: Optional[Tuple[float, float]] = Field(
        default=(5.0, 25.0), description="Per-trial uniform range for a constant peak power, null to keep peak_dbm"
    )
    boresight_azimuth_deg: float = 180.0
    boresight_elevation_deg: float = Field(default=0.0, gt=-90.0, lt=90.0)
    dynamic_range_db: float = Field(default=20.0, gt=0)
    beam_shape_exponent: float = Field(default=10.0, gt=0)

    @field_validator("peak_dbm_range")
    @classmethod
    def validate_peak_range(cls, v: Optional[Tuple[float, float]]) -> Optional[Tuple[float, float]]:
        """Ensure the range is ordered."""
        if v is not None and v[0] > v[1]:
            raise ValueError(f"peak_dbm_range {list(v)} is inverted")
        return v

    def to_model(self) -> JammerTemplate:
        """Convert JammerSchema to JammerTemplate domain value object."""
        modulation: ModulationScheme = self.modulation.to_model()
        return JammerTemplate(
            modulation=modulation,
            peak_dbm_range=self.peak_dbm_range,
            boresight=AnglePair.from_degrees(
                Degrees(self.boresight_azimuth_deg), Degrees(self.boresight_elevation_deg)
            ),
            dynamic_range_db=Decibels(self.dynamic_range_db),
            beam_shape_exponent=self.beam_shape_exponent,
        )


class PathLossSchema(StrictSchema):
    """Log-distance path loss with shadowing."""

    reference_distance_m: float = Field(default=1.0, gt=0)
    path_loss_exponent: float = Field(default=2.0, gt=0)
    shadowing_std_db: float = Field(default=2.0, ge=0, description="Standard deviation of the shadowing, dB")

    def to_model(self) -> PathLossModel:
        return PathLossModel(
            reference_distance_m=Meters(self.reference_distance_m),
            path_loss_exponent=self.path_loss_exponent,
            shadowing_std_db=Decibels(self.shadowing_std_db),
        )


class AoaErrorSchema(StrictSchema):
    """JSR to AoA error power curve, deg^2."""

    sigma_ref_deg2: float = Field(default=1.0, ge=0)
    jsr_ref_db: float = 10.0
    slope: float = Field(default=1.0, ge=0)
    sigma_min_deg2: float = Field(default=0.01, ge=0)
    sigma_max_deg2: float = Field(default=100.0, ge=0)
    scale: float = Field(default=1.0, ge=0)

    @model_validator(mode="after")
    def validate_bounds(self) -> "AoaErrorSchema":
        """Ensure sigma_min <= sigma_max."""
        if self.sigma_min_deg2 > self.sigma_max_deg2:
            raise ValueError(f"sigma_min_deg2 {self.sigma_min_deg2} exceeds sigma_max_deg2 {self.sigma_max_deg2}")
        return self

    def to_model(self) -> AoaErrorModel:
        return AoaErrorModel(
            sigma_ref_deg2=self.sigma_ref_deg2,
            jsr_ref_db=Decibels(self.jsr_ref_db),
            slope=self.slope,
            sigma_min_deg2=self.sigma_min_deg2,
            sigma_max_deg2=self.sigma_max_deg2,
            scale=self.scale,
        )


class PhysicalDominantSchema(StrictSchema):
    mode: Literal["physical_dominant"] = "physical_dominant"

    def to_model(self) -> PhysicalDominant:
        return PhysicalDominant()


class DirectProbabilitySchema(StrictSchema):
    mode: Literal["direct_probability"] = "direct_probability"
    p_a: float = Field(default=1.0, ge=0, le=1)

    def to_model(self) -> DirectProbability:
        return DirectProbability(p_a=self.p_a)


AttributionSchema = Annotated[
    Union[PhysicalDominantSchema, DirectProbabilitySchema],
    Field(discriminator="mode"),
]


class LeanSchema(StrictSchema):
    """Displacement of the cruising box toward jammer A; offset null means no lean."""

    offset_m: Optional[float] = Field(default=None, ge=0)
    half_extent_m: float = Field(default=30.0, gt=0)

    def to_model(self) -> LeanSpec:
        offset = Meters(self.offset_m) if self.offset_m is not None else None
        return LeanSpec(offset_m=offset, half_extent_m=Meters(self.half_extent_m))


class SpgdSchema(StrictSchema):
    """SPGD hyperparameters."""

    iterations: int = Field(default=10, ge=1)
    learning_rate: float = Field(default=1.0, gt=0)
    decay: float = Field(default=0.7, gt=0, le=1)
    pruning_rate: float = Field(default=0.3, ge=0, lt=1)

    def to_model(self) -> SpgdParams:
        return SpgdParams(
            iterations=self.iterations,
            learning_rate=self.learning_rate,
            decay=self.decay,
            pruning_rate=self.pruning_rate,
        )


def _default_cruising_area() -> BoxSchema:
    return BoxSchema(low=(0.0, 0.0, 5.0), high=(100.0, 100.0, 25.0))


def _default_jammer_area() -> BoxSchema:
    return BoxSchema(low=(40.0, 40.0, 12.0), high=(60.0, 60.0, 18.0))


class ScenarioSchema(StrictSchema):
    """A complete scenario; every field defaults to the ideal-scenario setup."""

    cruising_area: BoxSchema = Field(default_factory=_default_cruising_area)
    jammer_area: BoxSchema = Field(default_factory=_default_jammer_area)
    other_jammer_area: Optional[BoxSchema] = Field(default=None, description="Defaults to the cruising area")
    jammers: List[JammerSchema] = Field(default_factory=lambda: [JammerSchema()], min_length=1)
    signal_power_dbm: float = -15.0
    n_samples: int = Field(default=20, ge=2)
    path_loss: PathLossSchema = Field(default_factory=PathLossSchema)
    aoa_error: AoaErrorSchema = Field(default_factory=AoaErrorSchema)
    position_error_power: float = Field(default=3.0, ge=0, description="sigma_p, m^2")
    attribution: AttributionSchema = Field(default_factory=PhysicalDominantSchema)
    lean: LeanSchema = Field(default_factory=LeanSchema)
    measurement_window_s: float = Field(default=1.0, ge=0)
    window_start_span_s: Optional[float] = Field(default=None, ge=0)
    min_jammer_separation_m: float = Field(default=20.0, ge=0)
    spgd: SpgdSchema = Field(default_factory=SpgdSchema)
    trials: int = Field(default=500, ge=1)
    master_seed: int = Field(default=1, ge=0, lt=2**64)
    error_metric: ErrorMetric = ErrorMetric.RMSE

    def to_model(self) -> ScenarioConfig:
        """Convert ScenarioSchema to ScenarioConfig domain value object."""
        attribution: AttributionMode = self.attribution.to_model()
        return ScenarioConfig(
            cruising_area=self.cruising_area.to_model(),
            jammer_area=self.jammer_area.to_model(),
            other_jammer_area=self.other_jammer_area.to_model() if self.other_jammer_area else None,
            jammers=tuple(jammer.to_model() for jammer in self.jammers),
            signal_power_dbm=Dbm(self.signal_power_dbm),
            n_samples=self.n_samples,
            path_loss=self.path_loss.to_model(),
            aoa_error=self.aoa_error.to_model(),
            position_error_power=self.position_error_power,
            attribution=attribution,
            lean=self.lean.to_model(),
            measurement_window_s=Seconds(self.measurement_window_s),
            window_start_span_s=Seconds(self.window_start_span_s) if self.window_start_span_s is not None else None,
            min_jammer_separation_m=Meters(self.min_jammer_separation_m),
            spgd=self.spgd.to_model(),
            trials=self.trials,
            master_seed=self.master_seed,
            error_metric=self.error_metric,
        )


class SweepSchema(StrictSchema):
    """One swept parameter and its grid."""

    parameter: SweepParameter
    values: List[float] = Field(..., min_length=1)

    def to_model(self) -> SweepSpec:
        return SweepSpec(parameter=self.parameter, values=tuple(self.values))


class ScenarioDocumentSchema(StrictSchema):
    """Top level of a scenario file."""

    scenario: ScenarioSchema = Field(default_factory=ScenarioSchema)
    sweep: Optional[SweepSchema] = None


class RunManifestSchema(StrictSchema):
    """Everything needed to reproduce one result file."""

    manifest_version: int = 1
    package_version: str
    command: str
    options: Dict[str, Any] = Field(default_factory=dict)
    master_seed: int
    started_at: datetime
    finished_at: datetime
    outputs: List[str] = Field(default_factory=list)
    config: ScenarioDocumentSchema
