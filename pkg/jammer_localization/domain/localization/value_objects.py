"""Collection of Value Objects for the Localization domain of the Jammer Localization application."""

from dataclasses import dataclass

from jammer_localization.domain.common import ValueObject
from jammer_localization.domain.geometry.value_objects import Position3
from jammer_localization.domain.localization.common import LocalizationMethod
from jammer_localization.domain.localization.exceptions import InvalidSpgdParamsError


@dataclass(frozen=True)
class SpgdParams(ValueObject):
    """Hyperparameters of sample-pruning gradient descent."""

    iterations: int = 10
    learning_rate: float = 1.0
    decay: float = 0.7
    pruning_rate: float = 0.3

    def __post_init__(self):
        if self.iterations < 1:
            raise InvalidSpgdParamsError(f"Iterations must be >= 1, got {self.iterations}")
        if self.learning_rate <= 0:
            raise InvalidSpgdParamsError(f"Learning rate must be positive, got {self.learning_rate}")
        if not 0 < self.decay <= 1:
            raise InvalidSpgdParamsError(f"Decay must be in (0, 1], got {self.decay}")
        if not 0 <= self.pruning_rate < 1:
            raise InvalidSpgdParamsError(f"Pruning rate must be in [0, 1), got {self.pruning_rate}")


@dataclass(frozen=True)
class Estimate(ValueObject):
    """
    A position estimate plus the work it took.

    `gradient_evaluations` counts per-sample gradient vectors (SPGD),
    `constraint_rows` the rows of the stacked linear system (LSE/WLSE).
    """

    position: Position3
    method: LocalizationMethod
    samples_used: int
    iterations: int = 0
    gradient_evaluations: int = 0
    constraint_rows: int = 0

    @property
    def work_units(self) -> int:
        return self.gradient_evaluations if self.method == LocalizationMethod.SPGD else self.constraint_rows
