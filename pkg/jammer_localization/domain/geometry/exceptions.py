"""Collection of Exceptions."""

from jammer_localization.domain.exceptions import DomainError


class GeometryError(DomainError):
    """Base class for geometry-related errors."""

    pass


class DegenerateDirectionError(GeometryError):
    """A direction vector has zero norm."""

    pass
