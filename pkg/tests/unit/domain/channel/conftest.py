"""Shared fixtures for channel domain tests."""

import pytest

from jammer_localization.domain.channel.value_objects import (
    AntennaPattern,
    ConstantModulation,
    JammerSpec,
    PathLossModel,
)
from jammer_localization.domain.common import Dbm, Decibels
from jammer_localization.domain.geometry.value_objects import Position3


@pytest.fixture
def noiseless_path_loss():
    """Fixture providing free-space path loss without shadowing."""
    return PathLossModel(shadowing_std_db=Decibels(0.0))


@pytest.fixture
def default_antenna():
    """Fixture providing the default antenna pointing along -x."""
    return AntennaPattern()


@pytest.fixture
def constant_jammer(default_antenna):
    """Fixture providing a 15 dBm constant-power jammer at the origin."""
    return JammerSpec(
        position=Position3.origin(),
        antenna=default_antenna,
        modulation=ConstantModulation(Dbm(15.0)),
    )
