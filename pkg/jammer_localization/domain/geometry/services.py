"""
Angle conventions and direction vectors shared by all localizers.

One sign convention holds throughout the package: `direction_from_angles`
returns the unit bearing pointing from the UAV towards the jammer.
"""

import math
from typing import Tuple

from jammer_localization.domain.common import Degrees, Radians
from jammer_localization.domain.geometry.exceptions import DegenerateDirectionError
from jammer_localization.domain.geometry.value_objects import AnglePair, Position3

# Noisy elevations are kept this far away from the poles, where azimuth is undefined.
POLE_MARGIN_RAD = 1e-9
MAX_ELEVATION_RAD = math.pi / 2 - POLE_MARGIN_RAD

_TWO_PI = 2.0 * math.pi


def to_radians(angle: Degrees) -> Radians:
    """Degrees as read from files and sweep grids, in radians."""
    return Radians(math.radians(angle))


def wrap_azimuth(raw: float) -> Radians:
    """Maps any finite angle onto the half-open interval (-pi, pi]."""
    wrapped = math.remainder(raw, _TWO_PI)
    if wrapped <= -math.pi:
        wrapped += _TWO_PI
    return Radians(wrapped)


def clamp_elevation(raw: float) -> Radians:
    """Clamps an elevation into the open interval (-pi/2, pi/2)."""
    return Radians(min(max(raw, -MAX_ELEVATION_RAD), MAX_ELEVATION_RAD))


def direction_from_angles(angles: AnglePair) -> Position3:
    """Unit bearing [cos(az)cos(el), sin(az)cos(el), sin(el)] for an angle pair."""
    cos_el = math.cos(angles.elevation)
    return Position3(
        math.cos(angles.azimuth) * cos_el,
        math.sin(angles.azimuth) * cos_el,
        math.sin(angles.elevation),
    )


def angles_from_direction(vector: Position3) -> AnglePair:
    """
    Inverse of `direction_from_angles` for any non-zero vector.

    On the vertical axis the azimuth is canonicalized to 0 and the elevation
    clamped just inside the pole.
    """
    horizontal = math.hypot(vector.x, vector.y)
    if horizontal == 0.0 and vector.z == 0.0:
        raise DegenerateDirectionError("Cannot derive angles from a zero-norm vector")

    azimuth = math.atan2(vector.y, vector.x) if horizontal > 0.0 else 0.0
    elevation = math.atan2(vector.z, horizontal)
    return AnglePair(azimuth=wrap_azimuth(azimuth), elevation=clamp_elevation(elevation))


def orthogonal_vectors(angles: AnglePair) -> Tuple[Position3, Position3]:
    """
    The two unit vectors spanning the plane orthogonal to the bearing.

    o1 = [-sin(az), cos(az), 0], o2 = [cos(az)sin(el), sin(az)sin(el), -cos(el)].
    """
    sin_az, cos_az = math.sin(angles.azimuth), math.cos(angles.azimuth)
    sin_el, cos_el = math.sin(angles.elevation), math.cos(angles.elevation)
    o1 = Position3(-sin_az, cos_az, 0.0)
    o2 = Position3(cos_az * sin_el, sin_az * sin_el, -cos_el)
    return o1, o2


def unit_vector(vector: Position3) -> Position3:
    """Normalizes a vector; raises on zero norm."""
    norm = vector.norm()
    if norm == 0.0:
        raise DegenerateDirectionError("Cannot normalize a zero-norm vector")
    return vector * (1.0 / norm)
