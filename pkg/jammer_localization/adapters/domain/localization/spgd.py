"""
Sample-pruning gradient descent (SPGD).

Starting from the centroid of the reported UAV positions, every iteration
pulls the estimate toward the point at the same range along each
measured ray, then discards the samples whose bearing disagrees most with the
current estimate.

The step is the mean of the per-sample gradients, not their sum, and it is
taken across the bearings only: along its own ray a gradient just corrects
range, which carries no angular information. The mean is preconditioned by
the inverse of the mean normal-plane projector, so a unit step lands on the
point-to-line least squares point of the live samples and the decaying
learning rate blends toward it as pruning narrows the set.
"""

from typing import List, Sequence

import numpy as np

from jammer_localization.domain.geometry.services import direction_from_angles
from jammer_localization.domain.geometry.value_objects import Position3
from jammer_localization.domain.localization.common import LocalizationMethod
from jammer_localization.domain.localization.exceptions import InsufficientSamplesError
from jammer_localization.domain.localization.services import Localizer
from jammer_localization.domain.localization.value_objects import Estimate, SpgdParams
from jammer_localization.domain.sensing.value_objects import AoaSample

MIN_RETAINED_SAMPLES = 3


def bearings_of(samples: Sequence[AoaSample]) -> np.ndarray:
    """Measured UAV-to-jammer unit bearings as an (N, 3) array."""
    return np.vstack([direction_from_angles(sample.angles).as_array() for sample in samples])


def positions_of(samples: Sequence[AoaSample]) -> np.ndarray:
    """Reported UAV positions as an (N, 3) array."""
    return np.vstack([sample.reported_uav_position.as_array() for sample in samples])


def pruning_scores(estimate: np.ndarray, positions: np.ndarray, bearings: np.ndarray) -> np.ndarray:
    """
    d_n = || (p - p_n) / ||p - p_n|| - m_n || for every sample.

    A sample whose UAV position coincides with the estimate scores 0.
    """
    offsets = estimate - positions
    distances = np.linalg.norm(offsets, axis=1)
    scores = np.zeros(len(positions))
    valid = distances > 0.0
    units = offsets[valid] / distances[valid, None]
    scores[valid] = np.linalg.norm(units - bearings[valid], axis=1)
    return scores


def removal_count(n_samples: int, pruning_rate: float) -> int:
    """n_r = max(floor(N * eta), 1); a zero rate disables pruning."""
    if pruning_rate == 0.0:
        return 0
    return max(int(np.floor(n_samples * pruning_rate)), 1)


def retained_indices(scores: np.ndarray, pruning_rate: float) -> np.ndarray:
    """
    Indices (ascending) of the samples that survive one pruning step.

    The n_r highest scores are removed only if at least 3 samples remain;
    equal scores are removed lowest index first.
    """
    n_samples = scores.size
    n_remove = removal_count(n_samples, pruning_rate)
    if n_remove == 0 or n_samples - n_remove < MIN_RETAINED_SAMPLES:
        return np.arange(n_samples)
    order = np.argsort(-scores, kind="stable")
    return np.sort(order[n_remove:])


def prune_step(estimate: Position3, samples: Sequence[AoaSample], pruning_rate: float) -> List[AoaSample]:
    """Drops the samples that fit `estimate` worst, keeping the original order."""
    if not samples:
        return []
    scores = pruning_scores(estimate.as_array(), positions_of(samples), bearings_of(samples))
    return [samples[i] for i in retained_indices(scores, pruning_rate)]


def normal_projectors(bearings: np.ndarray) -> np.ndarray:
    """I - m_n m_n^T for every bearing, as an (N, 3, 3) array."""
    return np.eye(3)[None, :, :] - bearings[:, :, None] * bearings[:, None, :]


def descent_step(estimate: np.ndarray, positions: np.ndarray, bearings: np.ndarray) -> np.ndarray:
    """
    Preconditioned mean gradient at `estimate`.

    g_n = p_n + m_n * ||p - p_n|| - p; a sample coincident with the estimate
    contributes zero. Singular curvature (all live bearings parallel) falls
    back to the minimum-norm step.
    """
    ranges = np.linalg.norm(estimate - positions, axis=1)
    targets = positions + bearings * ranges[:, None]
    projectors = normal_projectors(bearings)
    gradient = np.einsum("nij,nj->i", projectors, targets - estimate) / len(positions)
    step, *_ = np.linalg.lstsq(projectors.mean(axis=0), gradient, rcond=None)
    return step


def spgd(samples: Sequence[AoaSample], params: SpgdParams) -> Estimate:
    """Runs sample-pruning gradient descent and returns the final estimate."""
    if len(samples) < MIN_RETAINED_SAMPLES:
        raise InsufficientSamplesError(f"SPGD needs at least {MIN_RETAINED_SAMPLES} samples, got {len(samples)}")

    positions = positions_of(samples)
    bearings = bearings_of(samples)
    estimate = positions.mean(axis=0)
    learning_rate = params.learning_rate
    gradient_evaluations = 0

    for _ in range(params.iterations):
        estimate = estimate + learning_rate * descent_step(estimate, positions, bearings)
        gradient_evaluations += len(positions)
        learning_rate *= params.decay

        kept = retained_indices(pruning_scores(estimate, positions, bearings), params.pruning_rate)
        positions = positions[kept]
        bearings = bearings[kept]

    return Estimate(
        position=Position3.from_array(estimate),
        method=LocalizationMethod.SPGD,
        samples_used=len(positions),
        iterations=params.iterations,
        gradient_evaluations=gradient_evaluations,
    )


class SpgdLocalizer(Localizer):
    """Localizer adapter for sample-pruning gradient descent."""

    def __init__(self, params: SpgdParams = SpgdParams()):
        self.params = params

    @property
    def method(self) -> LocalizationMethod:
        return LocalizationMethod.SPGD

    def locate(self, samples: Sequence[AoaSample]) -> Estimate:
        return spgd(samples, self.params)
