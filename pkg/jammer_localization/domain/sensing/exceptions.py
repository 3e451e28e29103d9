"""Collection of Exceptions."""

from jammer_localization.domain.exceptions import ConfigurationError, DomainError


class SensingError(DomainError):
    """Base class for measurement synthesis errors."""

    pass


class CoincidentPositionError(SensingError):
    """The UAV sits exactly on a jammer, the bearing is undefined."""

    pass


class SensingConfigurationError(SensingError, ConfigurationError):
    """Invalid sensing parameters (noise model, attribution, trajectory)."""

    pass
