"""Shared fixtures for sensing domain tests."""

import pytest

from jammer_localization.domain.channel.value_objects import (
    AntennaPattern,
    ConstantModulation,
    JammerSpec,
    PathLossModel,
)
from jammer_localization.domain.common import Dbm, Decibels, JammerId
from jammer_localization.domain.geometry.value_objects import Box, Position3
from jammer_localization.domain.sensing.value_objects import AoaErrorModel, SensingNoise


@pytest.fixture
def noiseless():
    """Fixture providing a noise model that perturbs nothing."""
    return SensingNoise(
        path_loss=PathLossModel(shadowing_std_db=Decibels(0.0)),
        aoa_error=AoaErrorModel.noiseless(),
        position_error_power=0.0,
    )


@pytest.fixture
def jammer_a():
    """Fixture providing jammer A at the center of the default jammer area."""
    return JammerSpec(
        position=Position3(50.0, 50.0, 15.0),
        antenna=AntennaPattern(),
        modulation=ConstantModulation(Dbm(20.0)),
        id=JammerId(0),
    )


@pytest.fixture
def jammer_b():
    """Fixture providing a weaker second jammer."""
    return JammerSpec(
        position=Position3(20.0, 80.0, 10.0),
        antenna=AntennaPattern(),
        modulation=ConstantModulation(Dbm(5.0)),
        id=JammerId(1),
    )


@pytest.fixture
def cruising_area():
    """Fixture providing the default cruising area."""
    return Box(Position3(0.0, 0.0, 5.0), Position3(100.0, 100.0, 25.0))
