"""
Received-power computation for directional, power-modulated jammers.

All functions are pure given an explicit numpy Generator; callers own the
partitioning of random streams.
"""

import math
from dataclasses import replace
from typing import Sequence

import numpy as np

from jammer_localization.domain.channel.common import FrequencyJitter
from jammer_localization.domain.channel.exceptions import SingularPathLossError
from jammer_localization.domain.channel.value_objects import (
    AntennaPattern,
    ConstantModulation,
    JammerSpec,
    ModulationScheme,
    PathLossModel,
    RandomUniformModulation,
    SinusoidalModulation,
)
from jammer_localization.domain.common import Dbm, Decibels, Radians
from jammer_localization.domain.geometry.services import unit_vector
from jammer_localization.domain.geometry.value_objects import Position3


def peak_power_at(jammer: JammerSpec, time_s: float, rng: np.random.Generator) -> Dbm:
    """Main-lobe transmit power of a jammer at a given instant."""
    modulation = jammer.modulation
    if isinstance(modulation, ConstantModulation):
        return modulation.peak_dbm
    if isinstance(modulation, RandomUniformModulation):
        return Dbm(float(rng.uniform(modulation.low_dbm, modulation.high_dbm)))
    if isinstance(modulation, SinusoidalModulation):
        angle = 2.0 * math.pi * time_s / modulation.effective_period_s + modulation.phase_rad
        return Dbm(modulation.mean_dbm + modulation.amplitude_db * math.sin(angle))
    raise TypeError(f"Unsupported modulation scheme {type(modulation).__name__}")


def realize_modulation(scheme: ModulationScheme, rng: np.random.Generator) -> ModulationScheme:
    """
    Fixes the per-trial random parts of a modulation template.

    Only the sinusoidal frequency jitter is drawn here: b ~ U(0, 2), redrawn
    while exactly zero, so the modulation clock stays fixed within a trial.
    """
    if isinstance(scheme, SinusoidalModulation) and scheme.frequency_jitter == FrequencyJitter.UNIFORM_FACTOR:
        factor = 0.0
        while factor == 0.0:
            factor = float(rng.uniform(0.0, 2.0))
        return replace(scheme, frequency_factor=factor)
    return scheme


def half_power_angle(pattern: AntennaPattern) -> Radians:
    """Off-boresight angle at which the main-lobe model drops by 3 dB."""
    return Radians(2.0 * math.acos(0.5 ** (1.0 / pattern.beam_shape_exponent)))


def antenna_gain_db(pattern: AntennaPattern, toward: Position3) -> Decibels:
    """
    Relative gain (<= 0 dB) of the antenna in the direction `toward`.

    Cosine-power main lobe cos^m(psi/2) floored at the dynamic range.
    """
    direction = unit_vector(toward)
    cos_psi = min(max(direction.dot(pattern.boresight), -1.0), 1.0)
    psi = math.acos(cos_psi)
    floor = 10.0 ** (-pattern.dynamic_range_db / 10.0)
    lobe = max(math.cos(psi / 2.0) ** pattern.beam_shape_exponent, floor)
    return Decibels(10.0 * math.log10(lobe))


def received_power_dbm(
    model: PathLossModel,
    jammer: JammerSpec,
    receiver: Position3,
    time_s: float,
    rng: np.random.Generator,
) -> Dbm:
    """
    Jamming power at the receiver, log-distance path loss plus shadowing.

    Draw order from `rng`: modulation draw (random scheme only), then shadowing.
    The shadowing draw happens even for zero std so stream usage does not
    depend on the noise level.
    """
    offset = receiver - jammer.position
    distance = offset.norm()
    if distance == 0.0:
        raise SingularPathLossError(f"Receiver coincides with jammer {jammer.id} at {jammer.position}")

    peak = peak_power_at(jammer, time_s, rng)
    gain = antenna_gain_db(jammer.antenna, offset)
    path_loss = 10.0 * model.path_loss_exponent * math.log10(distance / model.reference_distance_m)
    shadowing = float(rng.normal(0.0, 1.0)) * model.shadowing_std_db
    return Dbm(peak + gain - path_loss + shadowing)


def effective_jsr_db(dominant_dbm: float, other_jammers_dbm: Sequence[float], signal_dbm: float) -> Decibels:
    """Ratio of one jamming component to the legitimate signal plus all other jammers."""
    if not other_jammers_dbm:
        return Decibels(dominant_dbm - signal_dbm)
    interference_mw = 10.0 ** (signal_dbm / 10.0) + sum(10.0 ** (p / 10.0) for p in other_jammers_dbm)
    if interference_mw == 0.0:
        return Decibels(math.inf)
    return Decibels(dominant_dbm - 10.0 * math.log10(interference_mw))
