"""
Closed-form least-squares localizers.

Each sample contributes two linear constraints o_i^T p = o_i^T p_n, one per
vector orthogonal to its measured bearing. Rows are stacked all-o1 first,
then all-o2, giving a 2N x 3 system.
"""

from typing import Sequence, Tuple

import numpy as np

from jammer_localization.domain.exceptions import ConfigurationError
from jammer_localization.domain.geometry.services import orthogonal_vectors
from jammer_localization.domain.geometry.value_objects import Position3
from jammer_localization.domain.localization.common import LocalizationMethod
from jammer_localization.domain.localization.exceptions import InsufficientSamplesError, SingularGeometryError
from jammer_localization.domain.localization.services import Localizer
from jammer_localization.domain.localization.value_objects import Estimate
from jammer_localization.domain.sensing.value_objects import AoaSample

MIN_RCOND = 1e-12
MIN_SAMPLES = 2


def constraint_system(samples: Sequence[AoaSample]) -> Tuple[np.ndarray, np.ndarray]:
    """Returns the stacked constraint matrix A (2N x 3) and right-hand side b (2N)."""
    first_rows = []
    second_rows = []
    for sample in samples:
        o1, o2 = orthogonal_vectors(sample.angles)
        first_rows.append(o1.as_array())
        second_rows.append(o2.as_array())

    matrix = np.vstack(first_rows + second_rows)
    positions = np.vstack([sample.reported_uav_position.as_array() for sample in samples] * 2)
    rhs = np.einsum("ij,ij->i", matrix, positions)
    return matrix, rhs


def _check_geometry(normal_matrix: np.ndarray) -> None:
    with np.errstate(divide="ignore"):
        condition = np.linalg.cond(normal_matrix)
    if not np.isfinite(condition) or 1.0 / condition < MIN_RCOND:
        raise SingularGeometryError(f"Measurement geometry is rank deficient (condition number {condition:.3e})")


def _require_samples(samples: Sequence[AoaSample]) -> None:
    if len(samples) < MIN_SAMPLES:
        raise InsufficientSamplesError(f"Least squares needs at least {MIN_SAMPLES} samples, got {len(samples)}")


def _solve(normal_matrix: np.ndarray, normal_rhs: np.ndarray) -> Position3:
    try:
        solution = np.linalg.solve(normal_matrix, normal_rhs)
    except np.linalg.LinAlgError as e:
        raise SingularGeometryError(f"Normal equations are singular: {e}") from e
    if not np.all(np.isfinite(solution)):
        raise SingularGeometryError("Normal equations produced a non-finite solution")
    return Position3.from_array(solution)


def lse(samples: Sequence[AoaSample]) -> Estimate:
    """Unweighted least-squares estimate: p = (A^T A)^-1 A^T b."""
    _require_samples(samples)
    matrix, rhs = constraint_system(samples)
    normal_matrix = matrix.T @ matrix
    _check_geometry(normal_matrix)
    return Estimate(
        position=_solve(normal_matrix, matrix.T @ rhs),
        method=LocalizationMethod.LSE,
        samples_used=len(samples),
        constraint_rows=matrix.shape[0],
    )


def wlse_weights(jsr_db: Sequence[float], path_loss_exponent: float) -> np.ndarray:
    """
    Per-row weights 2 * 10^(J / (2 n_p)) for J = [jsr, jsr], scaled to sum to 2N.

    The scale does not affect the estimate; the exponent is shifted by the
    largest JSR before taking powers so strong samples do not overflow.
    Weights keep spreading with JSR where the AoA error power sits on its
    clamp, so at low JSR they no longer follow bearing accuracy.
    """
    if path_loss_exponent <= 0:
        raise ConfigurationError(f"Path loss exponent must be positive, got {path_loss_exponent}")
    stacked = np.concatenate([np.asarray(jsr_db, dtype=float)] * 2)
    peak = stacked.max()
    if np.isposinf(peak):
        weights = np.isposinf(stacked).astype(float)
    elif np.isneginf(peak):
        weights = np.ones_like(stacked)
    else:
        weights = 2.0 * 10.0 ** ((stacked - peak) / (2.0 * path_loss_exponent))
    return weights * (stacked.size / weights.sum())


def weighted_lse(samples: Sequence[AoaSample], weights: np.ndarray, method: LocalizationMethod) -> Estimate:
    """Least squares with explicit per-row weights (length 2N)."""
    _require_samples(samples)
    matrix, rhs = constraint_system(samples)
    if weights.shape != rhs.shape:
        raise ValueError(f"Expected {rhs.size} weights, got {weights.size}")
    # Rank is a property of the geometry, the weights only trade rows off against each other.
    _check_geometry(matrix.T @ matrix)
    weighted = matrix * weights[:, None]
    return Estimate(
        position=_solve(matrix.T @ weighted, weighted.T @ rhs),
        method=method,
        samples_used=len(samples),
        constraint_rows=matrix.shape[0],
    )


def wlse(samples: Sequence[AoaSample], path_loss_exponent: float) -> Estimate:
    """JSR-weighted least-squares estimate: p = (A^T W A)^-1 A^T W b."""
    _require_samples(samples)
    weights = wlse_weights([sample.jsr_db for sample in samples], path_loss_exponent)
    return weighted_lse(samples, weights, LocalizationMethod.WLSE)


class LseLocalizer(Localizer):
    """Localizer adapter for the unweighted least-squares estimate."""

    @property
    def method(self) -> LocalizationMethod:
        return LocalizationMethod.LSE

    def locate(self, samples: Sequence[AoaSample]) -> Estimate:
        return lse(samples)


class WlseLocalizer(Localizer):
    """Localizer adapter for the JSR-weighted least-squares estimate."""

    def __init__(self, path_loss_exponent: float = 2.0):
        if path_loss_exponent <= 0:
            raise ConfigurationError(f"Path loss exponent must be positive, got {path_loss_exponent}")
        self.path_loss_exponent = path_loss_exponent

    @property
    def method(self) -> LocalizationMethod:
        return LocalizationMethod.WLSE

    def locate(self, samples: Sequence[AoaSample]) -> Estimate:
        return wlse(samples, self.path_loss_exponent)
