"""Unit tests for localization value objects."""

import pytest

from jammer_localization.domain.exceptions import ConfigurationError
from jammer_localization.domain.geometry.value_objects import Position3
from jammer_localization.domain.localization.common import LocalizationMethod
from jammer_localization.domain.localization.exceptions import InvalidSpgdParamsError
from jammer_localization.domain.localization.value_objects import Estimate, SpgdParams

ORIGIN = Position3(0.0, 0.0, 0.0)


class TestEstimate:
    """Test suite for Estimate."""

    @pytest.mark.parametrize("method", [LocalizationMethod.LSE, LocalizationMethod.WLSE])
    def test_least_squares_work_is_constraint_rows(self, method):
        """Test that the linear solvers report their stacked rows."""
        estimate = Estimate(ORIGIN, method, samples_used=20, constraint_rows=40)

        assert estimate.work_units == 40

    def test_spgd_work_is_gradient_evaluations(self):
        """Test that SPGD reports gradient evaluations."""
        estimate = Estimate(
            ORIGIN, LocalizationMethod.SPGD, samples_used=9, iterations=10, gradient_evaluations=134, constraint_rows=0
        )

        assert estimate.work_units == 134

    def test_is_immutable(self):
        """Test that estimates cannot be changed after the fact."""
        estimate = Estimate(ORIGIN, LocalizationMethod.LSE, samples_used=4, constraint_rows=8)

        with pytest.raises(AttributeError):
            estimate.samples_used = 3


class TestSpgdParams:
    """Test suite for SpgdParams validation."""

    def test_errors_are_configuration_errors(self):
        """Test that bad hyperparameters map to usage errors at the CLI."""
        with pytest.raises(ConfigurationError):
            SpgdParams(decay=0.0)

    @pytest.mark.parametrize("decay", [1.0, 0.5])
    def test_decay_upper_bound_is_inclusive(self, decay):
        """Test that a constant step size is allowed."""
        assert SpgdParams(decay=decay).decay == decay

    def test_pruning_rate_of_one_is_refused(self):
        """Test that pruning everything is refused."""
        with pytest.raises(InvalidSpgdParamsError):
            SpgdParams(pruning_rate=1.0)
