"""Collection of Common Objects for the Jammer Localization domain."""

from dataclasses import dataclass
from typing import NewType

# Value Objects using NewType for stronger typing
Meters = NewType("Meters", float)
Radians = NewType("Radians", float)
Degrees = NewType("Degrees", float)
Dbm = NewType("Dbm", float)
Decibels = NewType("Decibels", float)
Seconds = NewType("Seconds", float)
JammerId = NewType("JammerId", int)


@dataclass(frozen=True)
class ValueObject:
    """Base class for value objects."""

    pass  # Base class for value objects if needed
