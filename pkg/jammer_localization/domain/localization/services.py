"""Localization domain services."""

from abc import ABC, abstractmethod
from typing import Sequence

from jammer_localization.domain.localization.common import LocalizationMethod
from jammer_localization.domain.localization.value_objects import Estimate
from jammer_localization.domain.sensing.value_objects import AoaSample


class Localizer(ABC):
    """Abstract localizer: turns a set of AoA samples into a position estimate."""

    @property
    @abstractmethod
    def method(self) -> LocalizationMethod:
        """The method this localizer implements."""

    @abstractmethod
    def locate(self, samples: Sequence[AoaSample]) -> Estimate:
        """
        Estimates the jammer position from the samples.

        Must not depend on `AoaSample.attributed_jammer_id`.
        """
