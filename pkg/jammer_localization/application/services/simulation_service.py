"""
The Simulation Service fans Monte Carlo trials out over workers.
It is responsible for:
- Building the localizers of a scenario
- Running the trials of every grid point of a sweep
- Aggregating the per-method errors in trial order
"""

from typing import List, Optional, Sequence

from joblib import Parallel, delayed

from jammer_localization.application.interfaces import LocalizerFactoryInterface, SimulationServiceInterface
from jammer_localization.domain.localization.common import LocalizationMethod
from jammer_localization.domain.localization.services import Localizer
from jammer_localization.domain.simulation.services import aggregate_rmse, expand_sweep, failure_rate, run_trial
from jammer_localization.domain.simulation.value_objects import (
    ScenarioConfig,
    SweepPoint,
    SweepReport,
    SweepSpec,
    TrialResult,
)
from jammer_localization.shared.logging.port import LoggerPort


class SimulationService(SimulationServiceInterface):
    """Service for running trials and sweeps."""

    def __init__(
        self,
        localizer_factory: LocalizerFactoryInterface,
        methods: Sequence[LocalizationMethod] = tuple(LocalizationMethod),
        threads: int = 1,
        backend: str = "loky",
        logger: Optional[LoggerPort] = None,
    ):
        if threads < 1:
            raise ValueError(f"threads must be >= 1, got {threads}")

        self.localizer_factory = localizer_factory
        self.methods = tuple(methods)
        self.threads = threads
        self.backend = backend
        self.logger = logger

    def localizers_for(self, cfg: ScenarioConfig) -> List[Localizer]:
        """Localizers configured for a scenario."""
        return self.localizer_factory.create_all(
            methods=self.methods,
            path_loss_exponent=cfg.path_loss.path_loss_exponent,
            spgd_params=cfg.spgd,
        )

    def _execute(self, configs: Sequence[ScenarioConfig]) -> List[List[TrialResult]]:
        """Runs every trial of every config; results come back grouped per config, in trial order."""
        localizers = [self.localizers_for(cfg) for cfg in configs]
        jobs = [(point, trial_index) for point, cfg in enumerate(configs) for trial_index in range(cfg.trials)]

        if self.logger:
            self.logger.debug(f"Dispatching {len(jobs)} trials on {self.threads} worker(s) ({self.backend}).")

        outputs = Parallel(n_jobs=self.threads, backend=self.backend)(
            delayed(run_trial)(configs[point], trial_index, localizers[point]) for point, trial_index in jobs
        )

        grouped: List[List[TrialResult]] = [[] for _ in configs]
        for (point, _), result in zip(jobs, outputs):
            grouped[point].append(result)
        return grouped

    def run_trials(self, cfg: ScenarioConfig) -> List[TrialResult]:
        """Run cfg.trials trials and return them in trial-index order."""
        return self._execute([cfg])[0]

    def run_sweep(self, cfg: ScenarioConfig, sweep: Optional[SweepSpec] = None) -> SweepReport:
        """Run every grid point of a sweep (or the plain config) and aggregate per method."""
        configs = expand_sweep(cfg, sweep) if sweep else [cfg]
        values: Sequence[Optional[float]] = sweep.values if sweep else [None]

        if self.logger:
            name = sweep.parameter.value if sweep else "single point"
            self.logger.info(f"Sweep '{name}': {len(configs)} grid point(s) x {cfg.trials} trials")

        grouped = self._execute(configs)

        points = []
        for value, point_cfg, results in zip(values, configs, grouped):
            aggregates = aggregate_rmse(results, self.methods, point_cfg.error_metric, allow_empty=True)
            points.append(SweepPoint(value=value, aggregates=aggregates))

            if self.logger:
                self.logger.debug(
                    {
                        "value": value,
                        **{a.method.value: round(a.error_m, 4) for a in aggregates},
                    }
                )
                for result in results:
                    for method, reason in result.failures.items():
                        self.logger.debug(f"Trial {result.trial_index} {method.value} failed: {reason}")
                rate = failure_rate(results)
                if rate > 0:
                    self.logger.warning(
                        f"{rate:.1%} of trials at {value if value is not None else 'the configured point'} "
                        f"had at least one localizer failure"
                    )

        return SweepReport(
            parameter=sweep.parameter if sweep else None,
            points=tuple(points),
            metric=cfg.error_metric,
        )
