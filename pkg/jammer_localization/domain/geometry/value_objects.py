"""Collection of Value Objects for the Geometry domain of the Jammer Localization application."""

import math
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from jammer_localization.domain.common import Degrees, Meters, Radians, ValueObject
from jammer_localization.domain.geometry.exceptions import GeometryError


@dataclass(frozen=True)
class Position3(ValueObject):
    """Value Object for a 3D point or vector, in meters."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y) and math.isfinite(self.z)):
            raise GeometryError(f"Position components must be finite, got ({self.x}, {self.y}, {self.z})")

    def __add__(self, other: "Position3") -> "Position3":
        return Position3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Position3") -> "Position3":
        return Position3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __mul__(self, factor: float) -> "Position3":
        return Position3(self.x * factor, self.y * factor, self.z * factor)

    __rmul__ = __mul__

    def dot(self, other: "Position3") -> float:
        """Returns the scalar product with another vector."""
        return self.x * other.x + self.y * other.y + self.z * other.z

    def norm(self) -> Meters:
        """Returns the Euclidean norm."""
        return Meters(math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z))

    def distance_to(self, other: "Position3") -> Meters:
        """Returns the Euclidean distance to another point."""
        return (self - other).norm()

    def horizontal_distance_to(self, other: "Position3") -> Meters:
        """Returns the distance to another point projected on the x-y plane."""
        return Meters(math.hypot(self.x - other.x, self.y - other.y))

    def as_array(self) -> np.ndarray:
        """Returns the position as a (3,) float array."""
        return np.array([self.x, self.y, self.z], dtype=float)

    @classmethod
    def from_array(cls, values) -> "Position3":
        """Creates a position from any length-3 sequence."""
        x, y, z = (float(v) for v in values)
        return cls(x, y, z)

    @classmethod
    def origin(cls) -> "Position3":
        """Returns the origin."""
        return cls(0.0, 0.0, 0.0)


@dataclass(frozen=True)
class AnglePair(ValueObject):
    """Value Object for an azimuth/elevation bearing, in radians."""

    azimuth: Radians
    elevation: Radians

    def __post_init__(self):
        if not (math.isfinite(self.azimuth) and math.isfinite(self.elevation)):
            raise GeometryError("Angles must be finite")
        if not -math.pi < self.azimuth <= math.pi:
            raise GeometryError(f"Azimuth {self.azimuth} outside (-pi, pi]")
        if not -math.pi / 2 < self.elevation < math.pi / 2:
            raise GeometryError(f"Elevation {self.elevation} outside (-pi/2, pi/2)")

    @classmethod
    def from_degrees(cls, azimuth_deg: Degrees, elevation_deg: Degrees) -> "AnglePair":
        """Creates an angle pair from degrees."""
        from jammer_localization.domain.geometry.services import clamp_elevation, wrap_azimuth

        return cls(
            azimuth=wrap_azimuth(math.radians(azimuth_deg)),
            elevation=clamp_elevation(math.radians(elevation_deg)),
        )

    def to_degrees(self) -> Tuple[Degrees, Degrees]:
        """Returns (azimuth, elevation) in degrees."""
        return Degrees(math.degrees(self.azimuth)), Degrees(math.degrees(self.elevation))


@dataclass(frozen=True)
class Box(ValueObject):
    """Value Object for an axis-aligned box in meters."""

    low: Position3
    high: Position3

    def __post_init__(self):
        if self.low.x > self.high.x or self.low.y > self.high.y or self.low.z > self.high.z:
            raise GeometryError(f"Box low corner {self.low} exceeds high corner {self.high}")

    @property
    def center(self) -> Position3:
        """Returns the center of the box."""
        return (self.low + self.high) * 0.5

    @property
    def is_degenerate(self) -> bool:
        """True when the box has zero extent along any axis."""
        return self.low.x == self.high.x or self.low.y == self.high.y or self.low.z == self.high.z

    def contains(self, point: Position3) -> bool:
        """Checks whether a point lies inside the box (boundary included)."""
        return (
            self.low.x <= point.x <= self.high.x
            and self.low.y <= point.y <= self.high.y
            and self.low.z <= point.z <= self.high.z
        )

    def contains_box(self, other: "Box") -> bool:
        """Checks whether another box lies entirely inside this one."""
        return self.contains(other.low) and self.contains(other.high)

    def intersect(self, other: "Box") -> "Box":
        """Returns the intersection of two boxes; raises if they do not overlap."""
        low = np.maximum(self.low.as_array(), other.low.as_array())
        high = np.minimum(self.high.as_array(), other.high.as_array())
        if np.any(low > high):
            raise GeometryError(f"Boxes {self} and {other} do not overlap")
        return Box(Position3.from_array(low), Position3.from_array(high))

    def clip(self, point: Position3) -> Position3:
        """Returns the closest point of the box to `point`."""
        return Position3.from_array(np.clip(point.as_array(), self.low.as_array(), self.high.as_array()))

    def sample_uniform(self, rng: np.random.Generator) -> Position3:
        """Draws one point uniformly inside the box."""
        return Position3.from_array(rng.uniform(self.low.as_array(), self.high.as_array()))
