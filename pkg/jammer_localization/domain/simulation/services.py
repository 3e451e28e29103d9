"""
Monte Carlo trial execution and error aggregation.

Every trial derives its random streams from (master_seed, trial_index), so a
trial's outcome does not depend on which worker runs it or when. Grid points
of a sweep reuse the same trial streams, which pairs the trials across the
grid.
"""

import math
import time
from dataclasses import replace
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from jammer_localization.domain.channel.services import realize_modulation
from jammer_localization.domain.channel.value_objects import (
    AntennaPattern,
    ConstantModulation,
    JammerSpec,
    SinusoidalModulation,
)
from jammer_localization.domain.common import Dbm, Degrees, JammerId, Seconds
from jammer_localization.domain.exceptions import ConfigurationError
from jammer_localization.domain.geometry.services import direction_from_angles, to_radians
from jammer_localization.domain.geometry.value_objects import Position3
from jammer_localization.domain.localization.common import LocalizationMethod
from jammer_localization.domain.localization.exceptions import LocalizationError
from jammer_localization.domain.localization.services import Localizer
from jammer_localization.domain.localization.value_objects import SpgdParams
from jammer_localization.domain.sensing.exceptions import SensingError
from jammer_localization.domain.sensing.services import sample_trajectory, synthesize_sample
from jammer_localization.domain.sensing.value_objects import AoaSample, DirectProbability
from jammer_localization.domain.simulation.common import ErrorMetric, RandomStream, SweepParameter
from jammer_localization.domain.simulation.exceptions import (
    EmptyReportError,
    InvalidSweepError,
    JammerPlacementError,
)
from jammer_localization.domain.simulation.value_objects import (
    MethodAggregate,
    RealizedScene,
    ScenarioConfig,
    SweepSpec,
    TrialResult,
    WorkAggregate,
)

MAX_PLACEMENT_ATTEMPTS = 10_000
CI95_Z = 1.96


def trial_seed_sequence(
    master_seed: int,
    trial_index: int,
    stream: RandomStream,
    *extra: int,
) -> np.random.SeedSequence:
    """Seed sequence of one named stream of one trial."""
    return np.random.SeedSequence(master_seed, spawn_key=(trial_index, int(stream), *extra))


def trial_rng(master_seed: int, trial_index: int, stream: RandomStream, *extra: int) -> np.random.Generator:
    """Independent generator for one named stream of one trial."""
    return np.random.default_rng(trial_seed_sequence(master_seed, trial_index, stream, *extra))


def _place_jammers(cfg: ScenarioConfig, rng: np.random.Generator) -> List[Position3]:
    positions = [cfg.jammer_area.sample_uniform(rng)]
    for index in range(1, len(cfg.jammers)):
        for _ in range(MAX_PLACEMENT_ATTEMPTS):
            candidate = cfg.placement_area.sample_uniform(rng)
            if all(candidate.distance_to(other) >= cfg.min_jammer_separation_m for other in positions):
                positions.append(candidate)
                break
        else:
            raise JammerPlacementError(
                f"Could not place jammer {index} at least {cfg.min_jammer_separation_m} m from the others "
                f"after {MAX_PLACEMENT_ATTEMPTS} attempts"
            )
    return positions


def realize_scene(cfg: ScenarioConfig, rng: np.random.Generator) -> RealizedScene:
    """
    Draws the per-trial jammer set and measurement window start.

    Draw order: positions, one power uniform per jammer, window start, then
    modulation realizations. The power uniform is drawn even when unused so
    the later draws line up across configurations.
    """
    positions = _place_jammers(cfg, rng)
    power_draws = rng.random(len(cfg.jammers))
    window_start = Seconds(float(rng.uniform(0.0, cfg.start_span_s)))

    jammers = []
    for index, (template, position, power_draw) in enumerate(zip(cfg.jammers, positions, power_draws)):
        modulation = template.modulation
        if isinstance(modulation, ConstantModulation) and template.peak_dbm_range is not None:
            low, high = template.peak_dbm_range
            modulation = ConstantModulation(Dbm(low + (high - low) * float(power_draw)))
        modulation = realize_modulation(modulation, rng)
        antenna = AntennaPattern(
            boresight=direction_from_angles(template.boresight),
            dynamic_range_db=template.dynamic_range_db,
            beam_shape_exponent=template.beam_shape_exponent,
        )
        jammers.append(JammerSpec(position=position, antenna=antenna, modulation=modulation, id=JammerId(index)))

    return RealizedScene(jammers=tuple(jammers), window_start_s=window_start)


def sample_times(cfg: ScenarioConfig, window_start_s: float) -> List[float]:
    """N instants evenly spaced over [t0, t0 + T_m)."""
    n = cfg.n_samples
    return [window_start_s + cfg.measurement_window_s * i / n for i in range(n)]


def synthesize_trial_samples(cfg: ScenarioConfig, trial_index: int, scene: RealizedScene) -> List[AoaSample]:
    """Flies the trial trajectory and measures once per waypoint."""
    trajectory = sample_trajectory(
        cfg.cruising_area,
        cfg.n_samples,
        cfg.lean,
        scene.target,
        trial_rng(cfg.master_seed, trial_index, RandomStream.TRAJECTORY),
    )
    noise = cfg.noise
    return [
        synthesize_sample(
            scene.jammers,
            waypoint,
            time_s,
            noise,
            cfg.attribution,
            trial_rng(cfg.master_seed, trial_index, RandomStream.SAMPLE, sample_index),
        )
        for sample_index, (waypoint, time_s) in enumerate(zip(trajectory, sample_times(cfg, scene.window_start_s)))
    ]


def run_trial(cfg: ScenarioConfig, trial_index: int, localizers: Sequence[Localizer]) -> TrialResult:
    """
    Runs one trial: every localizer sees the identical sample list.

    Localizer and sensing failures are recorded per method instead of raised.
    """
    scene = realize_scene(cfg, trial_rng(cfg.master_seed, trial_index, RandomStream.SCENE))
    target = scene.target

    try:
        samples = synthesize_trial_samples(cfg, trial_index, scene)
    except SensingError as e:
        return TrialResult(
            trial_index=trial_index,
            true_position=target,
            failures={localizer.method: f"sensing: {e}" for localizer in localizers},
        )

    estimates = {}
    errors = {}
    failures = {}
    runtimes = {}
    for localizer in localizers:
        started = time.perf_counter()
        try:
            estimate = localizer.locate(samples)
        except LocalizationError as e:
            failures[localizer.method] = str(e)
            continue
        runtimes[localizer.method] = time.perf_counter() - started
        estimates[localizer.method] = estimate
        errors[localizer.method] = float(estimate.position.distance_to(target))

    return TrialResult(
        trial_index=trial_index,
        true_position=target,
        estimates=estimates,
        errors=errors,
        failures=failures,
        runtimes_s=runtimes,
    )


def _with_constant_peak(cfg: ScenarioConfig, value: float) -> ScenarioConfig:
    if not any(isinstance(t.modulation, ConstantModulation) for t in cfg.jammers):
        raise InvalidSweepError("max_power_dbm needs at least one constant-power jammer")
    jammers = tuple(
        (
            replace(t, modulation=ConstantModulation(Dbm(value)), peak_dbm_range=None)
            if isinstance(t.modulation, ConstantModulation)
            else t
        )
        for t in cfg.jammers
    )
    return replace(cfg, jammers=jammers)


def _with_phase(cfg: ScenarioConfig, value: float) -> ScenarioConfig:
    # The phase is an offset of the other jammers relative to jammer A.
    if not any(isinstance(t.modulation, SinusoidalModulation) for t in cfg.jammers[1:]):
        raise InvalidSweepError("phase_deg needs a sinusoidally modulated jammer besides jammer A")
    jammers = (cfg.jammers[0],) + tuple(
        (
            replace(t, modulation=replace(t.modulation, phase_rad=to_radians(Degrees(value))))
            if isinstance(t.modulation, SinusoidalModulation)
            else t
        )
        for t in cfg.jammers[1:]
    )
    return replace(cfg, jammers=jammers)


def _with_window(cfg: ScenarioConfig, value: float) -> ScenarioConfig:
    period = cfg.reference_period_s
    if period is None:
        raise InvalidSweepError("window_periods needs a sinusoidally modulated jammer")
    if value <= 0:
        raise InvalidSweepError(f"window_periods must be positive, got {value}")
    return replace(cfg, measurement_window_s=Seconds(value * period))


def _with_n_samples(cfg: ScenarioConfig, value: float) -> ScenarioConfig:
    if value != int(value):
        raise InvalidSweepError(f"n_samples must be an integer, got {value}")
    return replace(cfg, n_samples=int(value))


def _with_p_a(cfg: ScenarioConfig, value: float) -> ScenarioConfig:
    n_jammers = len(cfg.jammers)
    if value < 1.0 / n_jammers - 1e-12 or value > 1.0:
        raise InvalidSweepError(f"p_a must be in [1/M, 1] = [{1.0 / n_jammers:.4f}, 1] for M={n_jammers}, got {value}")
    return replace(cfg, attribution=DirectProbability(p_a=value))


def apply_override(cfg: ScenarioConfig, parameter: SweepParameter, value: float) -> ScenarioConfig:
    """Returns `cfg` with one sweep parameter set to `value`; raises InvalidSweepError if it does not apply."""
    if not math.isfinite(value):
        raise InvalidSweepError(f"{parameter.value} must be finite, got {value}")
    try:
        if parameter == SweepParameter.MAX_POWER_DBM:
            return _with_constant_peak(cfg, value)
        if parameter == SweepParameter.N_SAMPLES:
            return _with_n_samples(cfg, value)
        if parameter == SweepParameter.P_A:
            return _with_p_a(cfg, value)
        if parameter == SweepParameter.PHASE_DEG:
            return _with_phase(cfg, value)
        if parameter == SweepParameter.WINDOW_PERIODS:
            return _with_window(cfg, value)
        if parameter == SweepParameter.AOA_ERROR_SCALE:
            return replace(cfg, aoa_error=replace(cfg.aoa_error, scale=value))
        if parameter == SweepParameter.POSITION_ERROR_POWER:
            return replace(cfg, position_error_power=value)
        if parameter == SweepParameter.SHADOWING_STD_DB:
            return replace(cfg, path_loss=replace(cfg.path_loss, shadowing_std_db=value))
    except InvalidSweepError:
        raise
    except ConfigurationError as e:
        raise InvalidSweepError(f"Invalid {parameter.value}={value}: {e}") from e
    raise InvalidSweepError(f"Unsupported sweep parameter: {parameter}")


def expand_sweep(cfg: ScenarioConfig, sweep: SweepSpec) -> List[ScenarioConfig]:
    """One overridden config per grid value; every value is validated before any is used."""
    return [apply_override(cfg, sweep.parameter, value) for value in sweep.values]


def summarize_errors(errors: Sequence[float], metric: ErrorMetric = ErrorMetric.RMSE) -> Tuple[float, float]:
    """
    Returns (error, 95% half-width) for a list of per-trial errors.

    The RMSE half-width is the normal-approximation interval of the mean
    squared error carried through the square root.
    """
    if len(errors) == 0:
        raise EmptyReportError("No successful trial to aggregate")
    values = np.asarray(errors, dtype=float)
    n = values.size

    if metric == ErrorMetric.MAE:
        center = float(values.mean())
        spread = float(values.std(ddof=1)) if n > 1 else 0.0
        return center, CI95_Z * spread / math.sqrt(n)

    squared = values * values
    rmse = math.sqrt(float(squared.mean()))
    if n < 2 or rmse == 0.0:
        return rmse, 0.0
    return rmse, CI95_Z * float(squared.std(ddof=1)) / math.sqrt(n) / (2.0 * rmse)


def _ordered(results: Iterable[TrialResult]) -> List[TrialResult]:
    return sorted(results, key=lambda r: r.trial_index)


def _methods_in(results: Sequence[TrialResult]) -> List[LocalizationMethod]:
    seen = set()
    for result in results:
        seen.update(result.errors)
        seen.update(result.failures)
    return [method for method in LocalizationMethod if method in seen]


def aggregate_rmse(
    results: Iterable[TrialResult],
    methods: Optional[Sequence[LocalizationMethod]] = None,
    metric: ErrorMetric = ErrorMetric.RMSE,
    allow_empty: bool = False,
) -> Tuple[MethodAggregate, ...]:
    """
    Per-method error aggregates over a set of trials, summed in trial-index order.

    A method with no successful trial raises EmptyReportError, or yields a
    NaN aggregate when `allow_empty` is set.
    """
    ordered = _ordered(results)
    if not ordered:
        raise EmptyReportError("No trials to aggregate")

    aggregates = []
    for method in methods if methods is not None else _methods_in(ordered):
        errors = [r.errors[method] for r in ordered if method in r.errors]
        failures = sum(1 for r in ordered if method in r.failures)
        if errors or not allow_empty:
            try:
                error, half_width = summarize_errors(errors, metric)
            except EmptyReportError as e:
                raise EmptyReportError(f"No successful trial for {method.value}") from e
        else:
            error, half_width = math.nan, math.nan
        aggregates.append(
            MethodAggregate(method=method, error_m=error, ci95_m=half_width, trials=len(ordered), failures=failures)
        )
    return tuple(aggregates)


def failure_rate(results: Sequence[TrialResult], method: Optional[LocalizationMethod] = None) -> float:
    """Fraction of trials with any failure, or with a failure of `method`."""
    if not results:
        raise EmptyReportError("No trials attempted")
    if method is None:
        failed = sum(1 for r in results if r.failed)
    else:
        failed = sum(1 for r in results if method in r.failures)
    return failed / len(results)


def work_bound(method: LocalizationMethod, n_samples: int, params: SpgdParams) -> float:
    """
    Nominal work units of one run.

    SPGD: N * (1 - (1 - eta)^K) / eta + K gradient evaluations. Pruning
    removes whole samples and never goes below three, so small N or large
    eta can exceed this figure. The least squares methods always touch 2N
    constraint rows.
    """
    if method != LocalizationMethod.SPGD:
        return float(2 * n_samples)
    eta, k = params.pruning_rate, params.iterations
    if eta == 0.0:
        return float(n_samples * k)
    return n_samples * (1.0 - (1.0 - eta) ** k) / eta + k


def aggregate_work(
    results: Iterable[TrialResult],
    method: LocalizationMethod,
    n_samples: int,
    params: SpgdParams,
) -> WorkAggregate:
    """Mean samples used, work units and runtime of one method."""
    estimates = [(r.estimates[method], r.runtimes_s[method]) for r in _ordered(results) if method in r.estimates]
    if not estimates:
        raise EmptyReportError(f"No successful trial for {method.value}")
    return WorkAggregate(
        n_samples=n_samples,
        method=method,
        mean_samples_used=float(np.mean([e.samples_used for e, _ in estimates])),
        mean_work_units=float(np.mean([e.work_units for e, _ in estimates])),
        work_bound=work_bound(method, n_samples, params),
        mean_runtime_us=float(np.mean([runtime for _, runtime in estimates])) * 1e6,
    )
