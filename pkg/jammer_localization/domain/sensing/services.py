"""
Synthesis of noisy AoA measurements.

Random draws within one sample always happen in the same order: jammer
received powers (one modulation/shadowing pair per jammer), the attribution
draw, azimuth and elevation noise, then the three position-noise components.
"""

import math
from typing import List, Sequence

import numpy as np

from jammer_localization.domain.channel.services import effective_jsr_db, received_power_dbm
from jammer_localization.domain.channel.value_objects import JammerSpec
from jammer_localization.domain.common import Meters
from jammer_localization.domain.geometry.services import angles_from_direction, clamp_elevation, wrap_azimuth
from jammer_localization.domain.geometry.value_objects import AnglePair, Box, Position3
from jammer_localization.domain.sensing.exceptions import CoincidentPositionError, SensingConfigurationError
from jammer_localization.domain.sensing.value_objects import (
    AoaErrorModel,
    AoaSample,
    AttributionMode,
    DirectProbability,
    LeanSpec,
    PhysicalDominant,
    SensingNoise,
)

# Above this exponent 10**x overflows a float.
_MAX_DECADE_EXPONENT = 300.0


def sigma_d_from_jsr(model: AoaErrorModel, jsr_db: float) -> float:
    """AoA error power in deg^2 for an effective JSR."""
    exponent = -model.slope * (jsr_db - model.jsr_ref_db) / 10.0
    if model.sigma_ref_deg2 == 0.0 or exponent == -math.inf:
        raw = 0.0
    elif exponent > _MAX_DECADE_EXPONENT:
        raw = math.inf
    else:
        raw = model.sigma_ref_deg2 * 10.0**exponent
    return min(max(raw, model.sigma_min_deg2), model.sigma_max_deg2) * model.scale


def angle_error_std_rad(sigma_d_deg2: float) -> float:
    """Standard deviation of one angle error, sqrt(sigma_d) / 2 degrees, in radians."""
    return math.radians(math.sqrt(sigma_d_deg2) / 2.0)


def position_error_std_m(position_error_power: float) -> Meters:
    """Standard deviation of each reported-position coordinate error."""
    return Meters(math.sqrt(position_error_power) / 3.0)


def attribute(powers_dbm: Sequence[float], mode: AttributionMode, rng: np.random.Generator) -> int:
    """
    Index of the jammer whose bearing the measurement resolves.

    Jammer A is index 0. DirectProbability consumes exactly one uniform draw.
    """
    n_jammers = len(powers_dbm)
    if isinstance(mode, PhysicalDominant):
        return int(np.argmax(powers_dbm))
    if isinstance(mode, DirectProbability):
        if mode.p_a < 1.0 / n_jammers - 1e-12:
            raise SensingConfigurationError(
                f"Attribution probability {mode.p_a} is below 1/M = {1.0 / n_jammers:.4f} for M={n_jammers}"
            )
        draw = float(rng.random())
        if n_jammers == 1 or draw < mode.p_a:
            return 0
        share = (draw - mode.p_a) / (1.0 - mode.p_a)
        return 1 + min(int(share * (n_jammers - 1)), n_jammers - 2)
    raise TypeError(f"Unsupported attribution mode {type(mode).__name__}")


def synthesize_sample(
    jammers: Sequence[JammerSpec],
    true_uav_position: Position3,
    time_s: float,
    noise: SensingNoise,
    mode: AttributionMode,
    rng: np.random.Generator,
) -> AoaSample:
    """Produces one noisy AoA measurement taken at `true_uav_position` and `time_s`."""
    if not jammers:
        raise SensingConfigurationError("At least one jammer is required")
    for jammer in jammers:
        if jammer.position == true_uav_position:
            raise CoincidentPositionError(f"UAV position {true_uav_position} coincides with jammer {jammer.id}")

    powers = [received_power_dbm(noise.path_loss, jammer, true_uav_position, time_s, rng) for jammer in jammers]
    index = attribute(powers, mode, rng)
    resolved = jammers[index]

    others = [power for i, power in enumerate(powers) if i != index]
    jsr = effective_jsr_db(powers[index], others, noise.signal_dbm)

    true_angles = angles_from_direction(resolved.position - true_uav_position)
    angle_std = angle_error_std_rad(sigma_d_from_jsr(noise.aoa_error, jsr))
    azimuth_error, elevation_error = rng.standard_normal(2) * angle_std
    angles = AnglePair(
        azimuth=wrap_azimuth(true_angles.azimuth + azimuth_error),
        elevation=clamp_elevation(true_angles.elevation + elevation_error),
    )

    position_error = rng.standard_normal(3) * position_error_std_m(noise.position_error_power)
    reported = Position3.from_array(true_uav_position.as_array() + position_error)

    return AoaSample(
        reported_uav_position=reported,
        angles=angles,
        jsr_db=jsr,
        time_s=time_s,
        attributed_jammer_id=resolved.id,
    )


def cruise_box(area: Box, lean: LeanSpec, anchor: Position3, rng: np.random.Generator) -> Box:
    """
    The box the UAV cruises in for one trial.

    Without lean this is the whole area. With lean, a square column is centered
    `lean.offset_m` from the anchor in a random horizontal direction, its
    center pulled back into the area, and cut to the area.
    """
    if lean.offset_m is None:
        return area
    heading = float(rng.uniform(0.0, 2.0 * math.pi))
    center = area.clip(
        Position3(
            anchor.x + lean.offset_m * math.cos(heading),
            anchor.y + lean.offset_m * math.sin(heading),
            area.center.z,
        )
    )
    column = Box(
        low=Position3(center.x - lean.half_extent_m, center.y - lean.half_extent_m, area.low.z),
        high=Position3(center.x + lean.half_extent_m, center.y + lean.half_extent_m, area.high.z),
    )
    return column.intersect(area)


def sample_trajectory(
    area: Box,
    n: int,
    lean: LeanSpec,
    anchor: Position3,
    rng: np.random.Generator,
) -> List[Position3]:
    """Draws `n` cruising waypoints, uniform in the (possibly leaning) cruise box."""
    if n < 2:
        raise SensingConfigurationError(f"At least 2 waypoints are needed to localize, got {n}")
    if area.is_degenerate:
        raise SensingConfigurationError(f"Cruising area {area} is degenerate")

    box = cruise_box(area, lean, anchor, rng)
    points = rng.uniform(box.low.as_array(), box.high.as_array(), size=(n, 3))
    return [Position3.from_array(row) for row in points]
