"""Collection of Common Objects for the Channel domain of the Jammer Localization application."""

from enum import Enum


class ModulationKind(Enum):
    """Power-modulation schemes a jammer may apply."""

    CONSTANT = "constant"
    RANDOM_UNIFORM = "random_uniform"
    SINUSOIDAL = "sinusoidal"


class FrequencyJitter(Enum):
    """How the sinusoidal modulation frequency varies between trials."""

    NONE = "none"
    UNIFORM_FACTOR = "uniform_factor"  # f_m = b * f_m_nominal, b ~ U(0, 2)
