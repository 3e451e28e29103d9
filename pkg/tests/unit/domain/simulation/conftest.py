"""Shared fixtures for simulation domain tests."""

import pytest

from jammer_localization.adapters.domain.localization.factory import LocalizerFactory
from jammer_localization.domain.channel.value_objects import JammerTemplate, PathLossModel, SinusoidalModulation
from jammer_localization.domain.common import Dbm, Decibels, Seconds
from jammer_localization.domain.geometry.value_objects import Position3
from jammer_localization.domain.localization.common import LocalizationMethod
from jammer_localization.domain.localization.value_objects import Estimate
from jammer_localization.domain.sensing.value_objects import AoaErrorModel
from jammer_localization.domain.simulation.value_objects import ScenarioConfig, TrialResult


@pytest.fixture
def quick_config():
    """Fixture providing a small default scenario."""
    return ScenarioConfig(n_samples=8, trials=4, master_seed=3)


@pytest.fixture
def noiseless_config():
    """Fixture providing a scenario without any channel, AoA or position noise."""
    return ScenarioConfig(
        n_samples=12,
        trials=3,
        master_seed=7,
        path_loss=PathLossModel(shadowing_std_db=Decibels(0.0)),
        aoa_error=AoaErrorModel.noiseless(),
        position_error_power=0.0,
    )


@pytest.fixture
def sinusoidal_pair_config():
    """Fixture providing two sinusoidally modulated jammers."""
    sinusoid = SinusoidalModulation(Dbm(12.5), Decibels(7.5), Seconds(2.0))
    template = JammerTemplate(modulation=sinusoid, peak_dbm_range=None)
    return ScenarioConfig(jammers=(template, template), n_samples=8, trials=2)


@pytest.fixture
def localizers():
    """Fixture providing one localizer per method."""
    return LocalizerFactory().create_all()


@pytest.fixture
def make_result():
    """Fixture providing a builder of TrialResults with given per-method errors."""

    def build(trial_index, errors=None, failures=None, samples_used=8, work=16, runtime_s=1e-4):
        errors = errors or {}
        estimates = {
            method: Estimate(
                position=Position3(error, 0.0, 0.0),
                method=method,
                samples_used=samples_used,
                gradient_evaluations=work if method == LocalizationMethod.SPGD else 0,
                constraint_rows=work if method != LocalizationMethod.SPGD else 0,
            )
            for method, error in errors.items()
        }
        return TrialResult(
            trial_index=trial_index,
            true_position=Position3.origin(),
            estimates=estimates,
            errors=dict(errors),
            failures=dict(failures or {}),
            runtimes_s={method: runtime_s for method in errors},
        )

    return build
