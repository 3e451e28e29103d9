"""Collection of Exceptions."""

from jammer_localization.domain.exceptions import ConfigurationError, DomainError


class ChannelError(DomainError):
    """Base class for channel-related errors."""

    pass


class SingularPathLossError(ChannelError):
    """Receiver and transmitter coincide, path loss is undefined."""

    pass


class ChannelConfigurationError(ChannelError, ConfigurationError):
    """Invalid channel parameters."""

    pass
