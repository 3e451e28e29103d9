"""
Collection of adapters maps for the localization domain
of the Jammer Localization application.
"""

from typing import Dict

from jammer_localization.adapters.domain.localization.least_squares import LseLocalizer, WlseLocalizer
from jammer_localization.adapters.domain.localization.spgd import SpgdLocalizer
from jammer_localization.domain.localization.common import LocalizationMethod
from jammer_localization.domain.localization.services import Localizer

LOCALIZATION_METHOD_CLASS_MAP: Dict[LocalizationMethod, type[Localizer]] = {
    LocalizationMethod.LSE: LseLocalizer,
    LocalizationMethod.WLSE: WlseLocalizer,
    LocalizationMethod.SPGD: SpgdLocalizer,
}
