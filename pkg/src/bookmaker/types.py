"""Type definitions for bookmaker."""

import math
import sys
from dataclasses import asdict, dataclass, field
from typing import Any, Literal

from ._errors import DomainError, EmptyTableError

if sys.version_info >= (3, 11):
    from typing import Self
else:
    from typing_extensions import Self

# Absolute tolerance for every rate identity.
RATE_TOLERANCE = 1e-12

# First zero margin found, in the order rp, rn, pp, pn
Triviality = Literal[
    "non-trivial",
    "zero-real-positive",
    "zero-real-negative",
    "zero-predicted-positive",
    "zero-predicted-negative",
]

ReportFormat = Literal["json", "csv"]

# Measures tracked by the Monte Carlo study, in summary order
MeasureName = Literal[
    "informedness", "markedness", "correlation", "kappa", "f", "g", "a"
]

MEASURE_NAMES: tuple[MeasureName, ...] = (
    "informedness",
    "markedness",
    "correlation",
    "kappa",
    "f",
    "g",
    "a",
)


##### Contingency tables
@dataclass(frozen=True)
class ContingencyCounts:
    """Raw 2x2 contingency counts.

    Cells follow the systematic notation: A = TP, B = FP, C = FN, D = TN.
    """

    tp_count: int
    fp_count: int
    fn_count: int
    tn_count: int

    def __post_init__(self) -> None:
        for name in ("tp_count", "fp_count", "fn_count", "tn_count"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise DomainError(
                    f"{name} must be an integer count, got {type(value).__name__}"
                )
            if value < 0:
                raise DomainError(f"{name} must be non-negative, got {value}")
        if self.total == 0:
            raise EmptyTableError()

    @property
    def total(self) -> int:
        """N = A + B + C + D."""
        return self.tp_count + self.fp_count + self.fn_count + self.tn_count

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.tp_count, self.fp_count, self.fn_count, self.tn_count)

    def to_dict(self) -> dict[str, int]:
        return {
            "tp": self.tp_count,
            "fp": self.fp_count,
            "fn": self.fn_count,
            "tn": self.tn_count,
            "n": self.total,
        }


@dataclass(frozen=True)
class ContingencyRates:
    """Normalized contingency table.

    The four cells sum to 1; the marginal probabilities are derived from them,
    so rp + rn = 1 and pp + pn = 1 hold by construction.
    """

    tp: float
    fp: float
    fn: float
    tn: float

    def __post_init__(self) -> None:
        for name in ("tp", "fp", "fn", "tn"):
            value = getattr(self, name)
            if not math.isfinite(value) or not 0.0 <= value <= 1.0:
                raise DomainError(f"{name} must be a probability, got {value!r}")
        total = self.tp + self.fp + self.fn + self.tn
        if abs(total - 1.0) > RATE_TOLERANCE:
            raise DomainError(f"cells must sum to 1, got {total!r}")

    @property
    def rp(self) -> float:
        """Prevalence of real positives."""
        return self.tp + self.fn

    @property
    def rn(self) -> float:
        return self.fp + self.tn

    @property
    def pp(self) -> float:
        """Label bias: proportion of positive predictions."""
        return self.tp + self.fp

    @property
    def pn(self) -> float:
        return self.fn + self.tn

    def to_dict(self) -> dict[str, float]:
        return {
            "tp": self.tp,
            "fp": self.fp,
            "fn": self.fn,
            "tn": self.tn,
            "rp": self.rp,
            "rn": self.rn,
            "pp": self.pp,
            "pn": self.pn,
        }


##### Measure records
@dataclass(frozen=True)
class SurfaceMeasures:
    """Biased surface measures of one table.

    Undefined measures are None, never zero.
    """

    recall: float | None
    precision: float | None
    inverse_recall: float | None
    inverse_precision: float | None
    fallout: float | None
    miss_rate: float | None
    false_pos_accuracy: float | None
    false_neg_accuracy: float | None
    accuracy: float
    jaccard: float | None
    mean_arith: float | None
    mean_geom: float | None
    f_measure: float | None

    def to_dict(self) -> dict[str, float | None]:
        return asdict(self)


@dataclass(frozen=True)
class AssociationMeasures:
    """Unbiased association family of one table."""

    informedness: float | None
    markedness: float | None
    correlation: float | None
    kappa: float | None
    discriminant: float

    def to_dict(self) -> dict[str, float | None]:
        return asdict(self)


##### ROC space
@dataclass(frozen=True)
class RocPoint:
    """A single classifier in ROC space."""

    fpr: float
    tpr: float

    def __post_init__(self) -> None:
        for name in ("fpr", "tpr"):
            value = getattr(self, name)
            if not math.isfinite(value) or not 0.0 <= value <= 1.0:
                raise DomainError(f"{name} must be a probability, got {value!r}")


@dataclass(frozen=True)
class CostModel:
    """Skew and value ratios combined into a single isocost slope.

    c = c_v * c_s; the skew and cost insensitive model has c = 1.
    """

    class_skew: float = 1.0
    value_ratio: float = 1.0

    def __post_init__(self) -> None:
        for name in ("class_skew", "value_ratio"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0.0:
                raise DomainError(f"{name} must be positive, got {value!r}")

    @property
    def combined(self) -> float:
        return self.value_ratio * self.class_skew

    @classmethod
    def insensitive(cls) -> Self:
        return cls(class_skew=1.0, value_ratio=1.0)

    @classmethod
    def from_rates(cls, rates: ContingencyRates, value_ratio: float = 1.0) -> Self:
        """Take the class skew rn/rp from a table."""
        from .contingency import skew

        return cls(class_skew=skew(rates), value_ratio=value_ratio)

    @classmethod
    def from_costs(
        cls, rates: ContingencyRates, cost_pos: float, cost_neg: float
    ) -> Self:
        """Build the model from per-class costs, c_v = cn / cp."""
        if cost_pos <= 0.0 or cost_neg <= 0.0:
            raise DomainError("class costs must be positive")
        return cls.from_rates(rates, value_ratio=cost_neg / cost_pos)


@dataclass(frozen=True)
class SweepEntry:
    """One threshold of a score sweep."""

    threshold: float
    point: RocPoint
    auc: float


##### Monte Carlo study
@dataclass(frozen=True)
class StudyConfig:
    """Shape of a Monte Carlo study.

    Level k targets informedness k / (levels - 1). ``workers`` only bounds
    thread parallelism; results do not depend on it.
    """

    levels: int = 11
    runs_per_level: int = 10
    instances_per_run: int = 1000
    prevalence_range: tuple[float, float] = (0.05, 0.95)
    guess_bias_range: tuple[float, float] = (0.05, 0.95)
    seed: int = 20111
    workers: int | None = None

    def __post_init__(self) -> None:
        if self.levels < 2:
            raise DomainError(f"levels must be at least 2, got {self.levels}")
        if self.runs_per_level < 1:
            raise DomainError(
                f"runs_per_level must be at least 1, got {self.runs_per_level}"
            )
        if self.instances_per_run < 10:
            raise DomainError(
                f"instances_per_run must be at least 10, got {self.instances_per_run}"
            )
        if not 0 <= self.seed < 2**64:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed}")
        if self.workers is not None and self.workers < 1:
            raise DomainError(f"workers must be at least 1, got {self.workers}")
        for name in ("prevalence_range", "guess_bias_range"):
            low, high = getattr(self, name)
            if not 0.0 < low <= high < 1.0:
                raise DomainError(
                    f"{name} must lie strictly inside (0, 1) with low <= high, "
                    f"got ({low!r}, {high!r})"
                )

    def target(self, level: int) -> float:
        return level / (self.levels - 1)


@dataclass(frozen=True)
class StudyRecord:
    """One Monte Carlo run: its draws, generated table and measured values."""

    level: int
    run: int
    target_b: float
    prevalence: float
    guess_bias: float
    counts: ContingencyCounts
    informedness: float | None
    markedness: float | None
    correlation: float | None
    kappa: float | None
    f: float | None
    g: float | None
    a: float | None

    def measure(self, name: MeasureName) -> float | None:
        value: float | None = getattr(self, name)
        return value


@dataclass(frozen=True)
class MeasureSummary:
    """Fidelity of one measure against the target and measured correlation."""

    measure: MeasureName
    mae_vs_target: float | None
    mae_vs_correlation: float | None
    slope: float | None
    intercept: float | None


@dataclass(frozen=True)
class StudySummary:
    measures: tuple[MeasureSummary, ...]

    def get(self, name: MeasureName) -> MeasureSummary:
        for summary in self.measures:
            if summary.measure == name:
                return summary
        raise KeyError(name)


##### Reports
@dataclass(frozen=True)
class Report:
    """Every in-scope measure of one table."""

    counts: ContingencyCounts
    triviality: Triviality
    surface: SurfaceMeasures
    association: AssociationMeasures
    roc_point: RocPoint | None
    auc: float | None
    prevalence: float
    bias: float
    skew: float | None
    wracc: float
    chance_recall: float = field(init=False)
    chance_precision: float = field(init=False)

    def __post_init__(self) -> None:
        # Chance-level recall is the bias, chance-level precision the prevalence
        object.__setattr__(self, "chance_recall", self.bias)
        object.__setattr__(self, "chance_precision", self.prevalence)

    def to_dict(self) -> dict[str, Any]:
        return {
            "counts": self.counts.to_dict(),
            "triviality": self.triviality,
            "surface": self.surface.to_dict(),
            "association": self.association.to_dict(),
            "roc": {
                "fpr": self.roc_point.fpr if self.roc_point else None,
                "tpr": self.roc_point.tpr if self.roc_point else None,
                "auc": self.auc,
            },
            "decomposition": {
                "prevalence": self.prevalence,
                "bias": self.bias,
                "skew": self.skew,
                "wracc": self.wracc,
                "chance_recall": self.chance_recall,
                "chance_precision": self.chance_precision,
            },
        }
