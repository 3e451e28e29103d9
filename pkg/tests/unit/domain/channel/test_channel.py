"""Unit tests for received-power computation."""

import math
from dataclasses import replace

import numpy as np
import pytest

from jammer_localization.domain.channel.common import FrequencyJitter, ModulationKind
from jammer_localization.domain.channel.exceptions import ChannelConfigurationError, SingularPathLossError
from jammer_localization.domain.channel.services import (
    antenna_gain_db,
    effective_jsr_db,
    half_power_angle,
    peak_power_at,
    realize_modulation,
    received_power_dbm,
)
from jammer_localization.domain.channel.value_objects import (
    AntennaPattern,
    ConstantModulation,
    JammerTemplate,
    PathLossModel,
    RandomUniformModulation,
    SinusoidalModulation,
)
from jammer_localization.domain.common import Dbm, Decibels, Radians, Seconds
from jammer_localization.domain.geometry.value_objects import Position3


class TestModulation:
    """Test suite for peak power schedules."""

    def test_constant(self, constant_jammer):
        """Test that a constant scheme ignores time and randomness."""
        rng = np.random.default_rng(0)

        assert peak_power_at(constant_jammer, 0.3, rng) == 15.0
        assert peak_power_at(constant_jammer, 7.0, rng) == 15.0

    def test_random_uniform_within_range(self, constant_jammer):
        """Test that the random scheme stays inside its range."""
        jammer = replace(constant_jammer, modulation=RandomUniformModulation(Dbm(5.0), Dbm(20.0)))
        rng = np.random.default_rng(1)

        draws = [peak_power_at(jammer, 0.0, rng) for _ in range(500)]

        assert min(draws) >= 5.0
        assert max(draws) <= 20.0
        assert np.std(draws) > 1.0

    def test_sinusoid(self, constant_jammer):
        """Test mean + amplitude * sin(2 pi t / T + phase)."""
        modulation = SinusoidalModulation(Dbm(12.5), Decibels(7.5), Seconds(1.0), phase_rad=Radians(math.pi / 2))
        jammer = replace(constant_jammer, modulation=modulation)
        rng = np.random.default_rng(0)

        assert peak_power_at(jammer, 0.0, rng) == pytest.approx(20.0)
        assert peak_power_at(jammer, 0.5, rng) == pytest.approx(5.0)
        assert peak_power_at(jammer, 0.25, rng) == pytest.approx(12.5)

    def test_kinds(self):
        """Test the kind tag of every scheme."""
        assert ConstantModulation(Dbm(1.0)).kind == ModulationKind.CONSTANT
        assert RandomUniformModulation(Dbm(1.0), Dbm(2.0)).kind == ModulationKind.RANDOM_UNIFORM
        assert SinusoidalModulation(Dbm(1.0), Decibels(1.0), Seconds(1.0)).kind == ModulationKind.SINUSOIDAL

    def test_invalid_schemes(self):
        """Test scheme validation."""
        with pytest.raises(ChannelConfigurationError):
            RandomUniformModulation(Dbm(20.0), Dbm(5.0))
        with pytest.raises(ChannelConfigurationError):
            SinusoidalModulation(Dbm(12.5), Decibels(-1.0), Seconds(1.0))
        with pytest.raises(ChannelConfigurationError):
            SinusoidalModulation(Dbm(12.5), Decibels(7.5), Seconds(0.0))
        with pytest.raises(ChannelConfigurationError):
            JammerTemplate(peak_dbm_range=(25.0, 5.0))


class TestRealizeModulation:
    """Test suite for per-trial modulation realization."""

    def test_without_jitter_is_unchanged(self):
        """Test that non-jittered schemes pass through."""
        scheme = SinusoidalModulation(Dbm(12.5), Decibels(7.5), Seconds(1.0))

        assert realize_modulation(scheme, np.random.default_rng(0)) is scheme
        assert realize_modulation(ConstantModulation(Dbm(3.0)), np.random.default_rng(0)) == ConstantModulation(
            Dbm(3.0)
        )

    def test_uniform_factor(self):
        """Test that the factor b ~ U(0, 2) rescales the period."""
        scheme = SinusoidalModulation(
            Dbm(12.5), Decibels(7.5), Seconds(1.0), frequency_jitter=FrequencyJitter.UNIFORM_FACTOR
        )
        factors = []
        for seed in range(200):
            realized = realize_modulation(scheme, np.random.default_rng(seed))
            factors.append(realized.frequency_factor)
            assert realized.effective_period_s == pytest.approx(1.0 / realized.frequency_factor)

        assert 0.0 < min(factors)
        assert max(factors) < 2.0
        assert np.mean(factors) == pytest.approx(1.0, abs=0.15)


class TestAntenna:
    """Test suite for the directional antenna model."""

    def test_half_power_angle(self, default_antenna):
        """Test the closed form and the -3 dB gain it implies."""
        psi = half_power_angle(default_antenna)
        direction = Position3(-math.cos(psi), math.sin(psi), 0.0)

        assert psi == pytest.approx(2.0 * math.acos(0.5 ** (1.0 / 10.0)))
        assert antenna_gain_db(default_antenna, direction) == pytest.approx(10.0 * math.log10(0.5))

    def test_boresight_gain_is_zero(self, default_antenna):
        """Test unit gain along the boresight."""
        assert antenna_gain_db(default_antenna, Position3(-3.0, 0.0, 0.0)) == pytest.approx(0.0, abs=1e-12)

    def test_back_lobe_floor(self, default_antenna):
        """Test that the gain never falls below the dynamic range."""
        assert antenna_gain_db(default_antenna, Position3(1.0, 0.0, 0.0)) == pytest.approx(-20.0)
        assert antenna_gain_db(default_antenna, Position3(0.0, 1.0, 0.0)) >= -20.0

    def test_gain_decreases_off_boresight(self, default_antenna):
        """Test monotonic decay inside the main lobe."""
        gains = [
            antenna_gain_db(default_antenna, Position3(-math.cos(a), math.sin(a), 0.0))
            for a in np.linspace(0.0, 1.5, 16)
        ]

        assert all(a >= b for a, b in zip(gains, gains[1:]))

    def test_boresight_must_be_unit(self):
        """Test antenna validation."""
        with pytest.raises(ChannelConfigurationError):
            AntennaPattern(boresight=Position3(2.0, 0.0, 0.0))


class TestReceivedPower:
    """Test suite for the received jamming power."""

    def test_log_distance_path_loss(self, constant_jammer, noiseless_path_loss):
        """Test 15 dBm minus 20 log10(10 m) on boresight."""
        power = received_power_dbm(
            noiseless_path_loss, constant_jammer, Position3(-10.0, 0.0, 0.0), 0.0, np.random.default_rng(0)
        )

        assert power == pytest.approx(-5.0)

    def test_path_loss_exponent(self, constant_jammer):
        """Test that the exponent scales the distance term."""
        model = PathLossModel(path_loss_exponent=3.0, shadowing_std_db=Decibels(0.0))

        power = received_power_dbm(model, constant_jammer, Position3(-10.0, 0.0, 0.0), 0.0, np.random.default_rng(0))

        assert power == pytest.approx(-15.0)

    def test_coincident_receiver_raises(self, constant_jammer, noiseless_path_loss):
        """Test the singular zero-distance case."""
        with pytest.raises(SingularPathLossError):
            received_power_dbm(noiseless_path_loss, constant_jammer, Position3.origin(), 0.0, np.random.default_rng(0))

    def test_shadowing_draw_consumed_at_zero_std(self, constant_jammer, noiseless_path_loss):
        """Test that stream usage does not depend on the shadowing level."""
        rng = np.random.default_rng(42)
        reference = np.random.default_rng(42)

        received_power_dbm(noiseless_path_loss, constant_jammer, Position3(-5.0, 1.0, 0.0), 0.0, rng)
        reference.normal(0.0, 1.0)

        assert rng.random() == reference.random()

    def test_shadowing_spread(self, constant_jammer):
        """Test that shadowing adds a zero-mean spread of the configured std."""
        model = PathLossModel(shadowing_std_db=Decibels(4.0))
        rng = np.random.default_rng(7)

        powers = [received_power_dbm(model, constant_jammer, Position3(-10.0, 0.0, 0.0), 0.0, rng) for _ in range(4000)]

        assert np.mean(powers) == pytest.approx(-5.0, abs=0.3)
        assert np.std(powers) == pytest.approx(4.0, rel=0.1)


class TestEffectiveJsr:
    """Test suite for the effective jamming-to-signal ratio."""

    def test_single_jammer_is_exact_difference(self):
        """Test that without other jammers the JSR is a plain difference."""
        assert effective_jsr_db(-20.0, [], -15.0) == -5.0

    def test_other_jammers_add_interference(self):
        """Test that an equal-power second jammer caps the JSR near 0 dB."""
        jsr = effective_jsr_db(-20.0, [-20.0], -80.0)

        assert jsr == pytest.approx(0.0, abs=1e-5)
        assert effective_jsr_db(-20.0, [-20.0], -15.0) < effective_jsr_db(-20.0, [], -15.0)

    def test_two_equal_interferers(self):
        """Test that signal plus one equal interferer costs 3 dB."""
        assert effective_jsr_db(0.0, [-15.0], -15.0) == pytest.approx(15.0 - 10.0 * math.log10(2.0))
