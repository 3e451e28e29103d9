"""Collection of Exceptions."""

from jammer_localization.domain.exceptions import ConfigurationError, DomainError


class SimulationError(DomainError):
    """Base class for Monte Carlo errors."""

    pass


class EmptyReportError(SimulationError):
    """No successful trial to aggregate."""

    pass


class InvalidSweepError(SimulationError, ConfigurationError):
    """A sweep grid value cannot be applied to the scenario."""

    pass


class ScenarioConfigurationError(SimulationError, ConfigurationError):
    """Invalid scenario configuration."""

    pass


class JammerPlacementError(SimulationError):
    """Jammers could not be placed with the requested separation."""

    pass
