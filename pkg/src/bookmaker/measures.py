"""Biased surface measures: recall, precision, their inverses and means."""

import math
from collections.abc import Callable

from ._errors import UndefinedMeasureError
from .types import ContingencyRates, SurfaceMeasures


def _ratio(numerator: float, denominator: float, measure: str, margin: str) -> float:
    if denominator == 0.0:
        raise UndefinedMeasureError(measure, margin)
    return numerator / denominator


def recall(rates: ContingencyRates) -> float:
    """Sensitivity, tpr = tp / rp."""
    return _ratio(rates.tp, rates.rp, "recall", "rp")


def precision(rates: ContingencyRates) -> float:
    """Confidence, tpa = tp / pp."""
    return _ratio(rates.tp, rates.pp, "precision", "pp")


def inverse_recall(rates: ContingencyRates) -> float:
    """Specificity, tnr = tn / rn."""
    return _ratio(rates.tn, rates.rn, "inverse_recall", "rn")


def inverse_precision(rates: ContingencyRates) -> float:
    """tna = tn / pn."""
    return _ratio(rates.tn, rates.pn, "inverse_precision", "pn")


def fallout(rates: ContingencyRates) -> float:
    """False positive rate, fp / rn = B / (B + D)."""
    return _ratio(rates.fp, rates.rn, "fallout", "rn")


def miss_rate(rates: ContingencyRates) -> float:
    """False negative rate, fn / rp = C / (A + C)."""
    return _ratio(rates.fn, rates.rp, "miss_rate", "rp")


def false_pos_accuracy(rates: ContingencyRates) -> float:
    """fpa = fp / pp."""
    return _ratio(rates.fp, rates.pp, "false_pos_accuracy", "pp")


def false_neg_accuracy(rates: ContingencyRates) -> float:
    """fna = fn / pn."""
    return _ratio(rates.fn, rates.pn, "false_neg_accuracy", "pn")


def accuracy(rates: ContingencyRates) -> float:
    """Rand accuracy, tp + tn."""
    return rates.tp + rates.tn


def jaccard(rates: ContingencyRates) -> float:
    """tp / (tp + fn + fp); ignores true negatives."""
    return _ratio(
        rates.tp, rates.tp + rates.fn + rates.fp, "jaccard", "tp + fn + fp"
    )


def pr_means(rates: ContingencyRates) -> tuple[float, float, float]:
    """
    Arithmetic, geometric and harmonic means of recall and precision.

    The harmonic mean is the F-measure, F = G^2 / A. At R = P = 0 all three
    means are 0.

    Returns:
        (A, G, F)

    Raises:
        UndefinedMeasureError: If recall or precision is undefined
    """
    r = recall(rates)
    p = precision(rates)
    mean_arith = (r + p) / 2.0
    mean_geom = math.sqrt(r * p)
    f_measure = 2.0 * r * p / (r + p) if r + p > 0.0 else 0.0
    return mean_arith, mean_geom, f_measure


def _defined(
    measure: Callable[[ContingencyRates], float], rates: ContingencyRates
) -> float | None:
    try:
        return measure(rates)
    except UndefinedMeasureError:
        return None


def surface_report(rates: ContingencyRates) -> SurfaceMeasures:
    """Compute every surface measure, leaving undefined ones as None."""
    try:
        mean_arith, mean_geom, f_measure = pr_means(rates)
    except UndefinedMeasureError:
        means: tuple[float | None, float | None, float | None] = (None, None, None)
    else:
        means = (mean_arith, mean_geom, f_measure)

    return SurfaceMeasures(
        recall=_defined(recall, rates),
        precision=_defined(precision, rates),
        inverse_recall=_defined(inverse_recall, rates),
        inverse_precision=_defined(inverse_precision, rates),
        fallout=_defined(fallout, rates),
        miss_rate=_defined(miss_rate, rates),
        false_pos_accuracy=_defined(false_pos_accuracy, rates),
        false_neg_accuracy=_defined(false_neg_accuracy, rates),
        accuracy=accuracy(rates),
        jaccard=_defined(jaccard, rates),
        mean_arith=means[0],
        mean_geom=means[1],
        f_measure=means[2],
    )
