"""Collection of Exceptions."""

from jammer_localization.domain.exceptions import ConfigurationError, DomainError


class LocalizationError(DomainError):
    """Base class for localization errors."""

    pass


class SingularGeometryError(LocalizationError):
    """The measurement geometry does not determine a unique position."""

    pass


class InsufficientSamplesError(LocalizationError, ConfigurationError):
    """Fewer measurements than the localizer needs."""

    pass


class InvalidSpgdParamsError(LocalizationError, ConfigurationError):
    """SPGD hyperparameters out of range."""

    pass
