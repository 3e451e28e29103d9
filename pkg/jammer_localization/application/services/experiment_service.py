"""
The Experiment Service builds the preset studies on top of the simulation service.
It is responsible for:
- The ideal single-jammer study (sample count x peak power)
- The multi-jammer study (attribution probability per jammer count and lean)
- The power-modulation study (phase offset and measurement window)
- Custom runs and the complexity benchmark
"""

from dataclasses import replace
from typing import List, Optional, Sequence, Tuple

from jammer_localization.application.interfaces import ExperimentServiceInterface, SimulationServiceInterface
from jammer_localization.domain.channel.common import FrequencyJitter
from jammer_localization.domain.channel.value_objects import (
    JammerTemplate,
    RandomUniformModulation,
    SinusoidalModulation,
)
from jammer_localization.domain.common import Dbm, Decibels, Radians, Seconds
from jammer_localization.domain.geometry.value_objects import Box, Position3
from jammer_localization.domain.localization.common import LocalizationMethod
from jammer_localization.domain.sensing.common import LeanCase
from jammer_localization.domain.sensing.value_objects import DirectProbability, LeanSpec, PhysicalDominant
from jammer_localization.domain.simulation.common import FrequencyMode, ModulationSweep, SweepParameter
from jammer_localization.domain.simulation.exceptions import ScenarioConfigurationError
from jammer_localization.domain.simulation.services import aggregate_work, apply_override
from jammer_localization.domain.simulation.value_objects import (
    ExperimentResult,
    LabeledReport,
    ScenarioConfig,
    SweepSpec,
    WorkAggregate,
)
from jammer_localization.shared.logging.port import LoggerPort

IDEAL_SAMPLE_COUNTS: Tuple[int, ...] = (8, 20, 40)
IDEAL_POWER_GRID_DBM: Tuple[float, ...] = (5.0, 10.0, 15.0, 20.0, 25.0)

MULTI_JAMMER_COUNTS: Tuple[int, ...] = (2, 3)
MULTI_SAMPLE_COUNT = 40

MODULATION_SAMPLE_COUNT = 40
PHASE_GRID_DEG: Tuple[float, ...] = tuple(22.5 * k for k in range(9))
WINDOW_GRID_PERIODS: Tuple[float, ...] = tuple(k / 10 for k in range(2, 32))
WINDOW_SWEEP_PHASE_DEG = 180.0
# Jammer B strip along the edge the default antennas face, as a fraction of the area width.
MODULATION_STRIP_DEPTH = 0.15

# Scheme i: peak power redrawn uniformly at every measurement.
SCHEME_I_LOW_DBM = Dbm(5.0)
SCHEME_I_HIGH_DBM = Dbm(20.0)
# Scheme ii: 12.5 + 7.5 sin(2 pi t / T + phase).
SCHEME_II_MEAN_DBM = Dbm(12.5)
SCHEME_II_AMPLITUDE_DB = Decibels(7.5)
SCHEME_II_PERIOD_S = Seconds(1.0)

COMPLEXITY_SAMPLE_COUNTS: Tuple[int, ...] = (8, 20, 40, 100, 200)


def p_a_grid(n_jammers: int) -> Tuple[float, ...]:
    """1/M followed by every tenth above it up to 1."""
    floor = 1.0 / n_jammers
    return (floor,) + tuple(k / 10 for k in range(1, 11) if k / 10 > floor + 1e-12)


def _jammer_set(cfg: ScenarioConfig, n_jammers: int) -> Tuple[JammerTemplate, ...]:
    """The first M configured jammers, repeating the last one if fewer are configured."""
    templates = list(cfg.jammers[:n_jammers])
    while len(templates) < n_jammers:
        templates.append(cfg.jammers[-1])
    return tuple(templates)


def edge_strip(cruising_area: Box, jammer_area: Box, depth: float = MODULATION_STRIP_DEPTH) -> Box:
    """Low-x strip of the cruising area, `depth` of its width deep, at jammer heights."""
    width = cruising_area.high.x - cruising_area.low.x
    return Box(
        low=Position3(cruising_area.low.x, cruising_area.low.y, jammer_area.low.z),
        high=Position3(cruising_area.low.x + depth * width, cruising_area.high.y, jammer_area.high.z),
    )


class ExperimentService(ExperimentServiceInterface):
    """Service for the preset studies."""

    def __init__(
        self,
        simulation_service: SimulationServiceInterface,
        logger: Optional[LoggerPort] = None,
    ):
        self.simulation_service = simulation_service
        self.logger = logger

    def ideal(self, cfg: ScenarioConfig) -> ExperimentResult:
        """Single jammer, sample count x peak power grid."""
        base = replace(cfg, jammers=cfg.jammers[:1], attribution=PhysicalDominant(), lean=LeanSpec.none())
        power_sweep = SweepSpec(SweepParameter.MAX_POWER_DBM, IDEAL_POWER_GRID_DBM)

        if self.logger:
            self.logger.info(
                f"Ideal scenario: N in {list(IDEAL_SAMPLE_COUNTS)} x max power in {list(IDEAL_POWER_GRID_DBM)} dBm"
            )

        series = []
        for n_samples in IDEAL_SAMPLE_COUNTS:
            point = apply_override(base, SweepParameter.N_SAMPLES, n_samples)
            report = self.simulation_service.run_sweep(point, power_sweep)
            series.append(LabeledReport(labels={"n_samples": n_samples}, value_column="max_power_dbm", report=report))

        return ExperimentResult(name="ideal", columns=("n_samples", "max_power_dbm"), series=tuple(series))

    def multi(
        self,
        cfg: ScenarioConfig,
        lean_cases: Sequence[LeanCase] = (LeanCase.STRONG, LeanCase.SLIGHT),
        jammer_counts: Sequence[int] = MULTI_JAMMER_COUNTS,
    ) -> ExperimentResult:
        """Several jammers, attribution probability sweep per jammer count and lean case."""
        series = []
        for n_jammers in jammer_counts:
            if n_jammers < 2:
                raise ScenarioConfigurationError(f"The multi-jammer study needs M >= 2, got {n_jammers}")
            for lean_case in lean_cases:
                base = replace(
                    cfg,
                    jammers=_jammer_set(cfg, n_jammers),
                    attribution=DirectProbability(p_a=1.0),
                    lean=LeanSpec.from_case(lean_case),
                    n_samples=MULTI_SAMPLE_COUNT,
                )
                grid = p_a_grid(n_jammers)

                if self.logger:
                    self.logger.info(f"Multi-jammer: M={n_jammers}, lean={lean_case.value}, P_A grid {list(grid)}")

                report = self.simulation_service.run_sweep(base, SweepSpec(SweepParameter.P_A, grid))
                series.append(
                    LabeledReport(
                        labels={"m_jammers": n_jammers, "lean_case": lean_case.value},
                        value_column="p_a",
                        report=report,
                    )
                )

        return ExperimentResult(name="multi", columns=("m_jammers", "lean_case", "p_a"), series=tuple(series))

    def _modulation_base(self, cfg: ScenarioConfig, freq_mode: FrequencyMode) -> ScenarioConfig:
        """
        Two jammers with the same sinusoidal power schedule, measured over one period.

        The UAV leans strongly toward jammer A and jammer B sits in the strip
        that the antennas face at the edge of the cruising area, so A
        dominates while both powers move together.
        """
        reference = cfg.jammers[0].modulation
        if isinstance(reference, SinusoidalModulation):
            sinusoid = replace(reference, phase_rad=Radians(0.0), frequency_factor=1.0)
        else:
            sinusoid = SinusoidalModulation(SCHEME_II_MEAN_DBM, SCHEME_II_AMPLITUDE_DB, SCHEME_II_PERIOD_S)
        jitter = FrequencyJitter.UNIFORM_FACTOR if freq_mode == FrequencyMode.RANDOM else FrequencyJitter.NONE
        sinusoid = replace(sinusoid, frequency_jitter=jitter)

        jammers = tuple(replace(t, modulation=sinusoid, peak_dbm_range=None) for t in _jammer_set(cfg, 2))
        return replace(
            cfg,
            jammers=jammers,
            other_jammer_area=(
                cfg.other_jammer_area
                if cfg.other_jammer_area is not None
                else edge_strip(cfg.cruising_area, cfg.jammer_area)
            ),
            attribution=PhysicalDominant(),
            lean=LeanSpec.strong(),
            n_samples=MODULATION_SAMPLE_COUNT,
            measurement_window_s=sinusoid.period_s,
        )

    def _scheme_i_reference(self, cfg: ScenarioConfig) -> LabeledReport:
        scheme_i = RandomUniformModulation(SCHEME_I_LOW_DBM, SCHEME_I_HIGH_DBM)
        base = self._modulation_base(cfg, FrequencyMode.CONSTANT)
        base = replace(base, jammers=tuple(replace(t, modulation=scheme_i) for t in base.jammers))
        report = self.simulation_service.run_sweep(base)
        return LabeledReport(
            labels={"sweep": ModulationSweep.PHASE.value, "scheme": "i", "freq_mode": None},
            value_column="sweep_value",
            report=report,
        )

    def modulation(
        self,
        cfg: ScenarioConfig,
        sweeps: Sequence[ModulationSweep] = tuple(ModulationSweep),
        freq_modes: Sequence[FrequencyMode] = (FrequencyMode.CONSTANT, FrequencyMode.RANDOM),
    ) -> ExperimentResult:
        """Power-modulated jammer pair, phase and measurement-window sweeps."""
        series = []

        if ModulationSweep.PHASE in sweeps:
            if self.logger:
                self.logger.info(f"Modulation: phase sweep over {list(PHASE_GRID_DEG)} deg")
            series.append(self._scheme_i_reference(cfg))
            for freq_mode in freq_modes:
                report = self.simulation_service.run_sweep(
                    self._modulation_base(cfg, freq_mode), SweepSpec(SweepParameter.PHASE_DEG, PHASE_GRID_DEG)
                )
                series.append(
                    LabeledReport(
                        labels={"sweep": ModulationSweep.PHASE.value, "scheme": "ii", "freq_mode": freq_mode.value},
                        value_column="sweep_value",
                        report=report,
                    )
                )

        if ModulationSweep.WINDOW in sweeps:
            if self.logger:
                self.logger.info(
                    f"Modulation: window sweep T_m/T in [{WINDOW_GRID_PERIODS[0]}, {WINDOW_GRID_PERIODS[-1]}] "
                    f"at phase {WINDOW_SWEEP_PHASE_DEG} deg"
                )
            for freq_mode in freq_modes:
                base = apply_override(
                    self._modulation_base(cfg, freq_mode), SweepParameter.PHASE_DEG, WINDOW_SWEEP_PHASE_DEG
                )
                # Measurements start at the modulation's zero phase.
                base = replace(base, window_start_span_s=Seconds(0.0))
                report = self.simulation_service.run_sweep(
                    base, SweepSpec(SweepParameter.WINDOW_PERIODS, WINDOW_GRID_PERIODS)
                )
                series.append(
                    LabeledReport(
                        labels={"sweep": ModulationSweep.WINDOW.value, "scheme": "ii", "freq_mode": freq_mode.value},
                        value_column="sweep_value",
                        report=report,
                    )
                )

        return ExperimentResult(
            name="modulation",
            columns=("sweep", "scheme", "sweep_value", "freq_mode"),
            series=tuple(series),
        )

    def custom(self, cfg: ScenarioConfig, sweep: Optional[SweepSpec] = None) -> ExperimentResult:
        """Fully configured run, optionally swept along one parameter."""
        report = self.simulation_service.run_sweep(cfg, sweep)
        labeled = LabeledReport(
            labels={"parameter": sweep.parameter.value if sweep else None},
            value_column="value",
            report=report,
        )
        return ExperimentResult(name="run", columns=("parameter", "value"), series=(labeled,))

    def complexity(
        self,
        cfg: ScenarioConfig,
        sample_counts: Sequence[int] = COMPLEXITY_SAMPLE_COUNTS,
    ) -> List[WorkAggregate]:
        """Mean work and runtime of every method per sample count."""
        aggregates = []
        for n_samples in sample_counts:
            point = apply_override(cfg, SweepParameter.N_SAMPLES, n_samples)
            results = self.simulation_service.run_trials(point)
            methods = [m for m in LocalizationMethod if any(m in r.estimates for r in results)]
            for method in methods:
                aggregates.append(aggregate_work(results, method, n_samples, point.spgd))

            if self.logger:
                self.logger.debug(
                    {a.method.value: round(a.mean_work_units, 2) for a in aggregates if a.n_samples == n_samples}
                )
        return aggregates

