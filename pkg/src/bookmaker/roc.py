"""ROC-space quantities for single classifiers and score sweeps."""

import logging
import math
from collections.abc import Sequence

import numpy as np

from ._errors import DomainError
from .measures import fallout, recall
from .types import ContingencyRates, CostModel, RocPoint, SweepEntry

logger = logging.getLogger(__name__)


def roc_point(rates: ContingencyRates) -> RocPoint:
    """Place a table in ROC space as (fpr, tpr)."""
    return RocPoint(fpr=fallout(rates), tpr=recall(rates))


def auc_single(p: RocPoint) -> float:
    """Area under the trapezoid through (0,0), (fpr,tpr) and (1,1)."""
    return (p.tpr - p.fpr + 1.0) / 2.0


def cost_gain(p: RocPoint, cost: CostModel) -> float:
    """Height of the isocost line of slope c through the point, tpr - c*fpr.

    At c = 1 this is informedness, the skew-insensitive form of WRAcc.
    """
    return p.tpr - cost.combined * p.fpr


def distance_to_optimum(p: RocPoint) -> float:
    """Euclidean distance to the perfect corner (0, 1)."""
    return math.hypot(p.fpr, 1.0 - p.tpr)


def sweep(gold: Sequence[bool], scores: Sequence[float]) -> list[SweepEntry]:
    """
    Trace the ROC staircase of a score-valued classifier.

    Thresholds are the distinct scores in descending order; an instance is
    predicted positive when its score is at least the threshold. The curve
    starts with an infinite threshold at (0, 0) and ends at (1, 1); tied
    scores share one threshold.

    Args:
        gold: Real class of each instance
        scores: Classifier score of each instance, higher meaning more positive

    Returns:
        Entries ordered by falling threshold, monotone in fpr and tpr

    Raises:
        DomainError: On length mismatch, non-finite scores, or single-class gold
    """
    if len(gold) != len(scores):
        raise DomainError(
            f"gold and scores differ in length ({len(gold)} != {len(scores)})"
        )
    if len(gold) == 0:
        raise DomainError("no scores given")

    real = np.asarray(gold, dtype=bool)
    values = np.asarray(scores, dtype=float)
    if not np.all(np.isfinite(values)):
        raise DomainError("scores must be finite")

    positives = int(np.count_nonzero(real))
    negatives = len(real) - positives
    if positives == 0 or negatives == 0:
        raise DomainError("gold must contain both classes")

    order = np.argsort(-values, kind="stable")
    sorted_scores = values[order]
    true_pos = np.cumsum(real[order])
    false_pos = np.cumsum(~real[order])

    # Last index of each run of tied scores
    boundaries = np.flatnonzero(np.diff(sorted_scores)).tolist() + [len(values) - 1]

    curve = [_entry(math.inf, RocPoint(fpr=0.0, tpr=0.0))]
    for index in boundaries:
        point = RocPoint(
            fpr=int(false_pos[index]) / negatives,
            tpr=int(true_pos[index]) / positives,
        )
        curve.append(_entry(float(sorted_scores[index]), point))

    logger.debug(
        "Swept %d scores into %d thresholds", len(values), len(curve) - 1
    )
    return curve


def _entry(threshold: float, point: RocPoint) -> SweepEntry:
    return SweepEntry(threshold=threshold, point=point, auc=auc_single(point))


def curve_auc(curve: Sequence[SweepEntry]) -> float:
    """Trapezoidal area under a swept curve."""
    fpr = np.array([entry.point.fpr for entry in curve])
    tpr = np.array([entry.point.tpr for entry in curve])
    return float(np.sum(np.diff(fpr) * (tpr[1:] + tpr[:-1]) / 2.0))


def best_operating_point(
    curve: Sequence[SweepEntry], cost: CostModel | None = None
) -> SweepEntry:
    """The entry touching the highest isocost line (earliest on ties)."""
    if not curve:
        raise DomainError("empty curve")
    model = cost if cost is not None else CostModel.insensitive()
    return max(curve, key=lambda entry: cost_gain(entry.point, model))


def nearest_to_optimum(curve: Sequence[SweepEntry]) -> SweepEntry:
    """The entry closest to (0, 1) (earliest on ties)."""
    if not curve:
        raise DomainError("empty curve")
    return min(curve, key=lambda entry: distance_to_optimum(entry.point))
