"""Construction, normalization and transformation of 2x2 contingency tables."""

import logging
import operator
from collections.abc import Sequence

import numpy as np

from ._errors import DomainError, UndefinedMeasureError
from .types import ContingencyCounts, ContingencyRates, Triviality

logger = logging.getLogger(__name__)

_ROUNDING_SLACK = 1e-6


def from_counts(a: int, b: int, c: int, d: int) -> ContingencyCounts:
    """
    Build a validated counts table from the cells A (TP), B (FP), C (FN), D (TN).

    Args:
        a: Real positives predicted positive
        b: Real negatives predicted positive
        c: Real positives predicted negative
        d: Real negatives predicted negative

    Returns:
        The counts table

    Raises:
        EmptyTableError: If every cell is zero
        DomainError: If a cell is negative or not an integer
    """
    try:
        cells = [operator.index(value) for value in (a, b, c, d)]
    except TypeError as e:
        raise DomainError(f"counts must be integers: {e}") from e
    return ContingencyCounts(*cells)


def from_labels(gold: Sequence[bool], pred: Sequence[bool]) -> ContingencyCounts:
    """Cross-tabulate real classes against predicted labels.

    Raises:
        DomainError: If the sequences are empty or differ in length
    """
    if len(gold) != len(pred):
        raise DomainError(
            f"gold and pred differ in length ({len(gold)} != {len(pred)})"
        )
    if len(gold) == 0:
        raise DomainError("no labels given")

    real = np.asarray(gold, dtype=bool)
    predicted = np.asarray(pred, dtype=bool)
    counts = from_counts(
        int(np.count_nonzero(real & predicted)),
        int(np.count_nonzero(~real & predicted)),
        int(np.count_nonzero(real & ~predicted)),
        int(np.count_nonzero(~real & ~predicted)),
    )
    logger.debug("Tabulated %d labels into %s", len(gold), counts.as_tuple())
    return counts


def normalize(counts: ContingencyCounts) -> ContingencyRates:
    """Divide every cell by N."""
    n = counts.total
    return ContingencyRates(
        tp=counts.tp_count / n,
        fp=counts.fp_count / n,
        fn=counts.fn_count / n,
        tn=counts.tn_count / n,
    )


def to_counts(rates: ContingencyRates, n: int) -> ContingencyCounts:
    """Recover integer counts from a normalized table and its N.

    Raises:
        DomainError: If the rates are not multiples of 1/n
    """
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")
    cells = []
    for name in ("tp", "fp", "fn", "tn"):
        scaled = getattr(rates, name) * n
        rounded = round(scaled)
        if abs(scaled - rounded) > _ROUNDING_SLACK:
            raise DomainError(f"{name} = {scaled!r}/{n} is not a whole count")
        cells.append(rounded)
    if sum(cells) != n:
        raise DomainError(f"recovered cells sum to {sum(cells)}, expected {n}")
    return ContingencyCounts(*cells)


def triviality(rates: ContingencyRates) -> Triviality:
    """Name the first zero margin (rp, rn, pp, pn), or "non-trivial"."""
    if rates.rp == 0.0:
        return "zero-real-positive"
    if rates.rn == 0.0:
        return "zero-real-negative"
    if rates.pp == 0.0:
        return "zero-predicted-positive"
    if rates.pn == 0.0:
        return "zero-predicted-negative"
    return "non-trivial"


def flip_inverse(rates: ContingencyRates) -> ContingencyRates:
    """Interchange positive and negative for both conditions and predictions."""
    return ContingencyRates(tp=rates.tn, fp=rates.fn, fn=rates.fp, tn=rates.tp)


def swap_predictions(rates: ContingencyRates) -> ContingencyRates:
    """Exchange the predicted rows only, turning every label around."""
    return ContingencyRates(tp=rates.fn, fp=rates.tn, fn=rates.tp, tn=rates.fp)


def skew(rates: ContingencyRates) -> float:
    """Class ratio c_s = rn / rp."""
    if rates.rp == 0.0:
        raise UndefinedMeasureError("skew", "rp", "skew is undefined: no real positives")
    return rates.rn / rates.rp


def prevalence_odds(rates: ContingencyRates) -> float:
    """Odds form of prevalence, rp / rn."""
    if rates.rn == 0.0:
        raise UndefinedMeasureError(
            "prevalence_odds", "rn", "prevalence odds are undefined: no real negatives"
        )
    return rates.rp / rates.rn


def _check_probability(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise DomainError(f"{name} must be a probability, got {value!r}")


def from_roc(tpr: float, fpr: float, prevalence: float) -> ContingencyRates:
    """Rebuild the normalized table from recall, fallout and prevalence."""
    for name, value in (("tpr", tpr), ("fpr", fpr), ("prevalence", prevalence)):
        _check_probability(name, value)
    rn = 1.0 - prevalence
    return ContingencyRates(
        tp=tpr * prevalence,
        fp=fpr * rn,
        fn=(1.0 - tpr) * prevalence,
        tn=(1.0 - fpr) * rn,
    )


def from_predictive(
    precision: float, inverse_precision: float, bias: float
) -> ContingencyRates:
    """Rebuild the normalized table from precision, inverse precision and bias."""
    for name, value in (
        ("precision", precision),
        ("inverse_precision", inverse_precision),
        ("bias", bias),
    ):
        _check_probability(name, value)
    pn = 1.0 - bias
    return ContingencyRates(
        tp=precision * bias,
        fp=(1.0 - precision) * bias,
        fn=(1.0 - inverse_precision) * pn,
        tn=inverse_precision * pn,
    )
