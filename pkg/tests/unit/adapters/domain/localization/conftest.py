"""Shared fixtures for localizer tests."""

import math
from dataclasses import replace
from typing import List, Sequence

import numpy as np
import pytest

from jammer_localization.domain.common import Decibels
from jammer_localization.domain.geometry.services import angles_from_direction, clamp_elevation, wrap_azimuth
from jammer_localization.domain.geometry.value_objects import AnglePair, Position3
from jammer_localization.domain.sensing.value_objects import AoaSample


def exact_samples(
    jammer: Position3,
    uav_positions: Sequence[Position3],
    jsr_db: Sequence[float] = (),
) -> List[AoaSample]:
    """Noise-free samples: every bearing points exactly at the jammer."""
    jsr = list(jsr_db) or [10.0] * len(uav_positions)
    return [
        AoaSample(
            reported_uav_position=p,
            angles=angles_from_direction(jammer - p),
            jsr_db=Decibels(j),
            time_s=0.0,
        )
        for p, j in zip(uav_positions, jsr)
    ]


def ring_below(jammer: Position3, count: int) -> List[Position3]:
    """UAV positions spread in azimuth, range and height below the jammer."""
    positions = []
    for k in range(count):
        azimuth = 2.0 * math.pi * k / count + 0.3
        horizontal = 25.0 + 3.0 * k
        positions.append(
            Position3(
                jammer.x + horizontal * math.cos(azimuth),
                jammer.y + horizontal * math.sin(azimuth),
                jammer.z - (4.0 + k % 7),
            )
        )
    return positions


@pytest.fixture
def jammer_position():
    """Fixture providing the true jammer position."""
    return Position3(50.0, 50.0, 15.0)


@pytest.fixture
def exact_ring(jammer_position):
    """Fixture providing 12 noise-free samples around the jammer."""
    return exact_samples(jammer_position, ring_below(jammer_position, 12))


@pytest.fixture
def collinear_samples(jammer_position):
    """Fixture providing samples whose bearings are all parallel."""
    positions = [Position3(x, 50.0, 15.0) for x in (10.0, 20.0, 30.0, 70.0)]
    return exact_samples(jammer_position, positions)


@pytest.fixture
def make_samples():
    """Fixture providing a builder of noise-free samples."""
    return exact_samples


@pytest.fixture
def ring():
    """Fixture providing a builder of UAV positions around a jammer."""
    return ring_below


@pytest.fixture
def noisy_ring(jammer_position):
    """Fixture providing 12 samples around the jammer with seeded bearing noise."""
    rng = np.random.default_rng(4)
    return [
        replace(
            s,
            angles=AnglePair(
                wrap_azimuth(s.angles.azimuth + float(rng.normal(0.0, 0.03))),
                clamp_elevation(s.angles.elevation + float(rng.normal(0.0, 0.03))),
            ),
        )
        for s in exact_samples(jammer_position, ring_below(jammer_position, 12))
    ]
