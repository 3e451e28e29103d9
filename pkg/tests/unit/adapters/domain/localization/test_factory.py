"""Unit tests for the localizer factory."""

import pytest

from jammer_localization.adapters.domain.localization.factory import LocalizerFactory
from jammer_localization.adapters.domain.localization.least_squares import LseLocalizer, WlseLocalizer
from jammer_localization.adapters.domain.localization.spgd import SpgdLocalizer
from jammer_localization.domain.localization.common import LocalizationMethod
from jammer_localization.domain.localization.value_objects import SpgdParams
from jammer_localization.shared.adapter_maps.localization import LOCALIZATION_METHOD_CLASS_MAP


class TestLocalizerFactory:
    """Test suite for LocalizerFactory."""

    @pytest.fixture
    def factory(self):
        """Fixture providing a LocalizerFactory."""
        return LocalizerFactory()

    @pytest.mark.parametrize(
        "method, expected_class",
        [
            (LocalizationMethod.LSE, LseLocalizer),
            (LocalizationMethod.WLSE, WlseLocalizer),
            (LocalizationMethod.SPGD, SpgdLocalizer),
        ],
    )
    def test_create(self, factory, method, expected_class):
        """Test that each method maps to its adapter."""
        localizer = factory.create(method)

        assert isinstance(localizer, expected_class)
        assert localizer.method == method

    def test_parameters_are_forwarded(self, factory):
        """Test that the path loss exponent and SPGD params reach the adapters."""
        params = SpgdParams(iterations=3, pruning_rate=0.1)

        wlse = factory.create(LocalizationMethod.WLSE, path_loss_exponent=3.5)
        spgd = factory.create(LocalizationMethod.SPGD, spgd_params=params)

        assert wlse.path_loss_exponent == 3.5
        assert spgd.params == params

    def test_create_all_keeps_order(self, factory):
        """Test that create_all follows the requested method order."""
        localizers = factory.create_all([LocalizationMethod.SPGD, LocalizationMethod.LSE])

        assert [localizer.method for localizer in localizers] == [LocalizationMethod.SPGD, LocalizationMethod.LSE]

    def test_create_all_defaults_to_every_method(self, factory):
        """Test the default method set."""
        methods = [localizer.method for localizer in factory.create_all()]

        assert methods == list(LocalizationMethod)

    def test_class_map_covers_every_method(self):
        """Test that no method is missing from the adapter map."""
        assert set(LOCALIZATION_METHOD_CLASS_MAP) == set(LocalizationMethod)
