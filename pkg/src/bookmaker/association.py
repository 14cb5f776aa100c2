"""Unbiased association measures: Informedness, Markedness, Correlation, Kappa.

All four share the discriminant dp = tp*tn - fp*fn as numerator and differ
only in how they normalize it by the marginal biases and prevalences:

    informedness = dp / (rp * rn)
    markedness   = dp / (pp * pn)
    correlation  = dp / sqrt(rp * rn * pp * pn)
    kappa        = dp / (dp + mean(fp, fn))
"""

import math
from collections.abc import Sequence

import numpy as np

from ._errors import DomainError, InfeasibleParametersError, UndefinedMeasureError
from .measures import _defined, fallout, false_neg_accuracy, precision, recall
from .types import RATE_TOLERANCE, AssociationMeasures, ContingencyRates


def _require_margins(
    rates: ContingencyRates, measure: str, *margins: str
) -> None:
    for margin in margins:
        if getattr(rates, margin) == 0.0:
            raise UndefinedMeasureError(measure, margin)


def _clamp_unit(value: float) -> float:
    # Rounding can push a perfect score a ulp past the bound
    return max(-1.0, min(1.0, value))


def discriminant(rates: ContingencyRates) -> float:
    """dp = tp*tn - fp*fn, in [-0.25, 0.25]."""
    return rates.tp * rates.tn - rates.fp * rates.fn


def informedness(rates: ContingencyRates) -> float:
    """Bookmaker Informedness (DeltaP'), recall + inverse recall - 1 = tpr - fpr."""
    _require_margins(rates, "informedness", "rp", "rn")
    return recall(rates) - fallout(rates)


def markedness(rates: ContingencyRates) -> float:
    """Markedness (DeltaP), precision + inverse precision - 1 = tpa - fna."""
    _require_margins(rates, "markedness", "pp", "pn")
    return precision(rates) - false_neg_accuracy(rates)


def correlation(rates: ContingencyRates) -> float:
    """Matthews correlation, signed geometric mean of informedness and markedness.

    The sign is the sign of dp.
    """
    _require_margins(rates, "correlation", "rp", "rn", "pp", "pn")
    product = rates.rp * rates.rn * rates.pp * rates.pn
    return _clamp_unit(discriminant(rates) / math.sqrt(product))


def kappa(rates: ContingencyRates) -> float:
    """Cohen's Kappa, (po - pe) / (1 - pe) with pe = pp*rp + pn*rn.

    Like correlation, kappa needs all four margins non-zero.
    """
    _require_margins(rates, "kappa", "rp", "rn", "pp", "pn")
    observed = rates.tp + rates.tn
    expected = rates.pp * rates.rp + rates.pn * rates.rn
    if expected >= 1.0:
        raise UndefinedMeasureError(
            "kappa", "1 - pe", "kappa is undefined: expected accuracy is 1"
        )
    return _clamp_unit((observed - expected) / (1.0 - expected))


def kappa_small_error_approximation(rates: ContingencyRates) -> float:
    """1 - mean(fp, fn) / dp.

    Only approaches kappa as fp and fn shrink; not a substitute for it.
    """
    dp = discriminant(rates)
    if dp == 0.0:
        raise UndefinedMeasureError("kappa_small_error_approximation", "dp")
    return 1.0 - (rates.fp + rates.fn) / 2.0 / dp


def weighted_relative_accuracy(rates: ContingencyRates) -> float:
    """WRAcc = pp * (precision - rp) = tp - pp*rp."""
    return rates.tp - rates.pp * rates.rp


def _slope_from_sums(
    n: float, sum_x: float, sum_y: float, sum_xy: float, sum_xx: float
) -> float:
    denominator = n * sum_xx - sum_x * sum_x
    if denominator <= 0.0:
        raise UndefinedMeasureError(
            "slope", "var(x)", "slope is undefined: predictor has zero variance"
        )
    return (n * sum_xy - sum_x * sum_y) / denominator


def least_squares_fit(
    xs: Sequence[float], ys: Sequence[float]
) -> tuple[float, float]:
    """Fit y = y0 + r*x by least squares.

    Returns:
        (slope r, intercept y0)

    Raises:
        UndefinedMeasureError: If xs has zero variance
    """
    x = np.asarray(xs, dtype=float)
    y = np.asarray(ys, dtype=float)
    if len(x) != len(y):
        raise DomainError(f"xs and ys differ in length ({len(x)} != {len(y)})")
    # Rounding in the raw sums must not turn a constant predictor into a slope
    if len(x) == 0 or np.ptp(x) == 0.0:
        raise UndefinedMeasureError(
            "slope", "var(x)", "slope is undefined: predictor has zero variance"
        )
    n = float(len(x))
    sum_x = float(x.sum())
    sum_y = float(y.sum())
    slope = _slope_from_sums(
        n, sum_x, sum_y, float((x * y).sum()), float((x * x).sum())
    )
    return slope, (sum_y - slope * sum_x) / n


def regression_slopes(rates: ContingencyRates) -> tuple[float, float]:
    """
    Least-squares slopes between the 0/1-coded real class R and prediction P.

    Each cell contributes its probability mass of observations at
    (P, R) in {0, 1}^2, so N cancels from the sums.

    Returns:
        (slope predicting R from P, slope predicting P from R), which equal
        (markedness, informedness)

    Raises:
        UndefinedMeasureError: If a margin is zero
    """
    _require_margins(rates, "regression_slopes", "rp", "rn", "pp", "pn")
    # For 0/1 coding, sum(x*x) == sum(x)
    real_from_pred = _slope_from_sums(1.0, rates.pp, rates.rp, rates.tp, rates.pp)
    pred_from_real = _slope_from_sums(1.0, rates.rp, rates.pp, rates.tp, rates.rp)
    return real_from_pred, pred_from_real


def _feasible(value: float, what: str) -> float:
    if value < -RATE_TOLERANCE or value > 1.0 + RATE_TOLERANCE:
        raise InfeasibleParametersError(f"no table realizes this {what}", value)
    return min(1.0, max(0.0, value))


def recall_from_informedness(b: float, prevalence: float, bias: float) -> float:
    """Recall = informedness * (1 - prevalence) + bias."""
    if not 0.0 < prevalence < 1.0:
        raise DomainError(
            f"prevalence must lie strictly inside (0, 1), got {prevalence!r}"
        )
    return _feasible(b * (1.0 - prevalence) + bias, "recall")


def informedness_from_recall(recall: float, prevalence: float, bias: float) -> float:
    """Informedness = (recall - bias) / (1 - prevalence)."""
    if prevalence >= 1.0:
        raise UndefinedMeasureError("informedness_from_recall", "1 - prevalence")
    return (recall - bias) / (1.0 - prevalence)


def precision_from_markedness(m: float, bias: float, prevalence: float) -> float:
    """Precision = markedness * (1 - bias) + prevalence."""
    return _feasible(m * (1.0 - bias) + prevalence, "precision")


def markedness_from_precision(
    precision: float, bias: float, prevalence: float
) -> float:
    """Markedness = (precision - prevalence) / (1 - bias)."""
    if bias >= 1.0:
        raise UndefinedMeasureError("markedness_from_precision", "1 - bias")
    return (precision - prevalence) / (1.0 - bias)


def association_report(rates: ContingencyRates) -> AssociationMeasures:
    """Compute the association family, leaving undefined measures as None."""
    return AssociationMeasures(
        informedness=_defined(informedness, rates),
        markedness=_defined(markedness, rates),
        correlation=_defined(correlation, rates),
        kappa=_defined(kappa, rates),
        discriminant=discriminant(rates),
    )
