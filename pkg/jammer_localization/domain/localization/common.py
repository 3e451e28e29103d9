"""Collection of Common Objects for the Localization domain of the Jammer Localization application."""

from enum import Enum


class LocalizationMethod(Enum):
    """Position estimators available to the simulator."""

    LSE = "lse"
    WLSE = "wlse"
    SPGD = "spgd"
