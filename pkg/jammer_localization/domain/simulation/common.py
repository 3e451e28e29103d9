"""Collection of Common Objects for the Simulation domain of the Jammer Localization application."""

from enum import Enum, IntEnum


class SweepParameter(Enum):
    """Scenario quantities a sweep may vary."""

    MAX_POWER_DBM = "max_power_dbm"
    N_SAMPLES = "n_samples"
    P_A = "p_a"
    PHASE_DEG = "phase_deg"
    WINDOW_PERIODS = "window_periods"  # T_m / T
    AOA_ERROR_SCALE = "aoa_error_scale"
    POSITION_ERROR_POWER = "position_error_power"
    SHADOWING_STD_DB = "shadowing_std_db"


class ErrorMetric(Enum):
    """How per-trial position errors are summarized."""

    RMSE = "rmse"
    MAE = "mae"


class RandomStream(IntEnum):
    """Second element of every trial spawn key."""

    SCENE = 0
    TRAJECTORY = 1
    SAMPLE = 2


class ModulationSweep(Enum):
    """Sub-sweeps of the power-modulation experiment."""

    PHASE = "phase"
    WINDOW = "window"


class FrequencyMode(Enum):
    """Whether the sinusoidal modulation frequency is fixed or jittered per trial."""

    CONSTANT = "constant"
    RANDOM = "random"
