"""Desk-scale Monte Carlo trends of the preset studies."""

import pytest

from jammer_localization.adapters.domain.localization.factory import LocalizerFactory
from jammer_localization.application.services.experiment_service import ExperimentService
from jammer_localization.application.services.simulation_service import SimulationService
from jammer_localization.domain.localization.common import LocalizationMethod
from jammer_localization.domain.sensing.common import LeanCase
from jammer_localization.domain.simulation.common import FrequencyMode, ModulationSweep, SweepParameter
from jammer_localization.domain.simulation.value_objects import LabeledReport, ScenarioConfig, SweepSpec

pytestmark = pytest.mark.slow

LINEAR_METHODS = (LocalizationMethod.LSE, LocalizationMethod.WLSE)


def rmse(series: LabeledReport, value: float, method: LocalizationMethod) -> float:
    """Error of `method` at the grid point closest to `value`."""
    point = min(series.report.points, key=lambda p: abs(p.value - value))
    assert point.value == pytest.approx(value)
    return next(a.error_m for a in point.aggregates if a.method == method)


@pytest.fixture(scope="module")
def experiments():
    """Fixture providing an experiment service over the real localizers."""
    return ExperimentService(SimulationService(LocalizerFactory()))


@pytest.fixture(scope="module")
def noise_sweep(experiments):
    """Fixture providing a single-jammer run swept over the AoA error scale."""
    sweep = SweepSpec(SweepParameter.AOA_ERROR_SCALE, (0.25, 1.0, 4.0))
    return experiments.custom(ScenarioConfig(trials=100), sweep).series[0]


@pytest.fixture(scope="module")
def multi_strong(experiments):
    """Fixture providing the two-jammer, strong-lean attribution sweep."""
    result = experiments.multi(ScenarioConfig(trials=200), (LeanCase.STRONG,), (2,))
    return result.series[0]


@pytest.fixture(scope="module")
def modulation(experiments):
    """Fixture providing the constant-frequency modulation sweeps keyed by sweep name."""
    result = experiments.modulation(
        ScenarioConfig(trials=300),
        sweeps=(ModulationSweep.PHASE, ModulationSweep.WINDOW),
        freq_modes=(FrequencyMode.CONSTANT,),
    )
    return {s.labels["sweep"]: s for s in result.series if s.labels["scheme"] == "ii"}


class TestNoiseTrend:
    """Test suite for the error growth with AoA noise."""

    @pytest.mark.parametrize("method", list(LocalizationMethod))
    def test_error_grows_with_noise(self, noise_sweep, method):
        """Test that every method degrades as the AoA error scale rises."""
        errors = [rmse(noise_sweep, scale, method) for scale in (0.25, 1.0, 4.0)]

        assert errors[0] < errors[1] < errors[2]


class TestMultiJammerTrend:
    """Test suite for the attribution probability sweep with a strong lean."""

    @pytest.mark.parametrize("method", list(LocalizationMethod))
    def test_correct_attribution_helps(self, multi_strong, method):
        """Test that attributing every sample correctly beats P_A = 0.6."""
        assert rmse(multi_strong, 1.0, method) < rmse(multi_strong, 0.6, method)

    def test_pruning_rejects_misattributed_bearings(self, multi_strong):
        """Test that SPGD beats LSE when one sample in ten points at the other jammer."""
        assert rmse(multi_strong, 0.9, LocalizationMethod.SPGD) < rmse(multi_strong, 0.9, LocalizationMethod.LSE)


class TestModulationTrend:
    """Test suite for the phase and measurement-window sweeps."""

    @pytest.mark.parametrize("method", LINEAR_METHODS)
    def test_opposed_phase_is_worse(self, modulation, method):
        """Test that jammer B taking over at A's troughs raises the linear errors."""
        phase = modulation[ModulationSweep.PHASE.value]

        assert rmse(phase, 180.0, method) > rmse(phase, 0.0, method)

    def test_pruning_helps_at_opposed_phase(self, modulation):
        """Test that SPGD beats LSE when B captures part of the window."""
        phase = modulation[ModulationSweep.PHASE.value]

        assert rmse(phase, 180.0, LocalizationMethod.SPGD) < rmse(phase, 180.0, LocalizationMethod.LSE)

    @pytest.mark.parametrize("method", LINEAR_METHODS)
    def test_whole_periods_peak(self, modulation, method):
        """Test that one full period holds more B captures than one and a half."""
        window = modulation[ModulationSweep.WINDOW.value]

        assert rmse(window, 1.0, method) > rmse(window, 1.5, method)

    def test_second_period_peak(self, modulation):
        """Test that two periods hold relatively more B captures than two and a half."""
        window = modulation[ModulationSweep.WINDOW.value]

        assert rmse(window, 2.0, LocalizationMethod.LSE) > rmse(window, 2.5, LocalizationMethod.LSE)
