"""Collection of Common Objects for the Sensing domain of the Jammer Localization application."""

from enum import Enum


class AttributionKind(Enum):
    """How a measurement picks the jammer whose bearing it resolves."""

    PHYSICAL_DOMINANT = "physical_dominant"
    DIRECT_PROBABILITY = "direct_probability"


class LeanCase(Enum):
    """Named cruising-center displacements toward jammer A."""

    NONE = "none"
    STRONG = "strong"
    SLIGHT = "slight"
