"""Factory for creating Localizer instances."""

from typing import List, Sequence

from jammer_localization.adapters.domain.localization.least_squares import WlseLocalizer
from jammer_localization.adapters.domain.localization.spgd import SpgdLocalizer
from jammer_localization.application.interfaces import LocalizerFactoryInterface
from jammer_localization.domain.localization.common import LocalizationMethod
from jammer_localization.domain.localization.exceptions import LocalizationError
from jammer_localization.domain.localization.services import Localizer
from jammer_localization.domain.localization.value_objects import SpgdParams
from jammer_localization.shared.adapter_maps.localization import LOCALIZATION_METHOD_CLASS_MAP


class LocalizerFactory(LocalizerFactoryInterface):
    """Factory for creating Localizer instances."""

    def create(
        self,
        method: LocalizationMethod,
        path_loss_exponent: float = 2.0,
        spgd_params: SpgdParams = SpgdParams(),
    ) -> Localizer:
        """
        Creates a localizer for the given method.
        """
        localizer_class = LOCALIZATION_METHOD_CLASS_MAP.get(method)
        if localizer_class is None:
            raise LocalizationError(f"Unsupported localization method: {method}")

        if localizer_class is WlseLocalizer:
            return WlseLocalizer(path_loss_exponent=path_loss_exponent)
        if localizer_class is SpgdLocalizer:
            return SpgdLocalizer(params=spgd_params)
        return localizer_class()

    def create_all(
        self,
        methods: Sequence[LocalizationMethod] = tuple(LocalizationMethod),
        path_loss_exponent: float = 2.0,
        spgd_params: SpgdParams = SpgdParams(),
    ) -> List[Localizer]:
        """Creates one localizer per method, in the given order."""
        return [self.create(method, path_loss_exponent, spgd_params) for method in methods]
