"""Dichotomous contingency-table evaluation: biased and unbiased measures."""

from ._errors import (
    BookmakerError,
    DomainError,
    EmptyTableError,
    InfeasibleParametersError,
    InputFileError,
    UndefinedMeasureError,
)
from ._version import __version__
from .association import (
    association_report,
    correlation,
    discriminant,
    informedness,
    informedness_from_recall,
    kappa,
    kappa_small_error_approximation,
    least_squares_fit,
    markedness,
    markedness_from_precision,
    precision_from_markedness,
    recall_from_informedness,
    regression_slopes,
    weighted_relative_accuracy,
)
from .cli import build_report
from .contingency import (
    flip_inverse,
    from_counts,
    from_labels,
    from_predictive,
    from_roc,
    normalize,
    prevalence_odds,
    skew,
    swap_predictions,
    to_counts,
    triviality,
)
from .measures import (
    accuracy,
    fallout,
    false_neg_accuracy,
    false_pos_accuracy,
    inverse_precision,
    inverse_recall,
    jaccard,
    miss_rate,
    pr_means,
    precision,
    recall,
    surface_report,
)
from .roc import (
    auc_single,
    best_operating_point,
    cost_gain,
    curve_auc,
    distance_to_optimum,
    nearest_to_optimum,
    roc_point,
    sweep,
)
from .simulate import (
    arun_study,
    generate_table,
    measure_record,
    read_study_csv,
    run_study,
    summarize,
)
from .types import (
    AssociationMeasures,
    ContingencyCounts,
    ContingencyRates,
    CostModel,
    MeasureName,
    MeasureSummary,
    Report,
    ReportFormat,
    RocPoint,
    StudyConfig,
    StudyRecord,
    StudySummary,
    SurfaceMeasures,
    SweepEntry,
    Triviality,
)

__all__ = [
    "__version__",
    # Contingency tables
    "from_counts",
    "from_labels",
    "normalize",
    "to_counts",
    "triviality",
    "flip_inverse",
    "swap_predictions",
    "skew",
    "prevalence_odds",
    "from_roc",
    "from_predictive",
    # Surface measures
    "recall",
    "precision",
    "inverse_recall",
    "inverse_precision",
    "fallout",
    "miss_rate",
    "false_pos_accuracy",
    "false_neg_accuracy",
    "accuracy",
    "jaccard",
    "pr_means",
    "surface_report",
    # Association measures
    "informedness",
    "markedness",
    "correlation",
    "kappa",
    "discriminant",
    "kappa_small_error_approximation",
    "weighted_relative_accuracy",
    "regression_slopes",
    "least_squares_fit",
    "recall_from_informedness",
    "informedness_from_recall",
    "precision_from_markedness",
    "markedness_from_precision",
    "association_report",
    # ROC analysis
    "roc_point",
    "auc_single",
    "cost_gain",
    "distance_to_optimum",
    "sweep",
    "curve_auc",
    "best_operating_point",
    "nearest_to_optimum",
    # Monte Carlo study
    "generate_table",
    "measure_record",
    "arun_study",
    "run_study",
    "summarize",
    "read_study_csv",
    # Reports
    "build_report",
    # Types
    "ContingencyCounts",
    "ContingencyRates",
    "Triviality",
    "SurfaceMeasures",
    "AssociationMeasures",
    "RocPoint",
    "CostModel",
    "SweepEntry",
    "StudyConfig",
    "StudyRecord",
    "MeasureName",
    "MeasureSummary",
    "StudySummary",
    "Report",
    "ReportFormat",
    # Errors
    "BookmakerError",
    "DomainError",
    "EmptyTableError",
    "UndefinedMeasureError",
    "InfeasibleParametersError",
    "InputFileError",
]
