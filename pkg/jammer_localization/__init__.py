"""UAV-based localization of power-modulated jammers from AoA measurements."""

__version__ = "0.1.0"
