"""Monte Carlo study comparing biased and unbiased measures.

Each run draws a prevalence and a guessing bias, then generates a table in
which every prediction is informed (copies the real class) with probability b
and is otherwise a biased coin flip. Expected informedness is therefore exactly
b, which makes b the ground truth every measure is scored against.
"""

import logging
from collections.abc import Sequence
from pathlib import Path

import anyio
import anyio.to_thread
import numpy as np

from ._errors import (
    BookmakerError,
    DomainError,
    InputFileError,
    UndefinedMeasureError,
)
from ._internal.readers import read_study_rows
from ._internal.rng import run_stream
from .association import (
    correlation,
    informedness,
    kappa,
    least_squares_fit,
    markedness,
)
from .contingency import from_counts, normalize, triviality
from .measures import _defined, pr_means
from .types import (
    MEASURE_NAMES,
    ContingencyCounts,
    MeasureSummary,
    StudyConfig,
    StudyRecord,
    StudySummary,
)

logger = logging.getLogger(__name__)

_BATCH_SIZE = 256


def generate_table(
    b: float,
    prevalence: float,
    guess_bias: float,
    n: int,
    rng: np.random.Generator,
) -> ContingencyCounts:
    """
    Sample one table of n instances at expected informedness b.

    Args:
        b: Probability that a prediction is informed
        prevalence: Probability that an instance is a real positive
        guess_bias: Probability that an uninformed prediction is positive
        n: Number of instances
        rng: Generator owned by the caller

    Returns:
        The sampled counts
    """
    for name, value in (
        ("b", b),
        ("prevalence", prevalence),
        ("guess_bias", guess_bias),
    ):
        if not 0.0 <= value <= 1.0:
            raise DomainError(f"{name} must be a probability, got {value!r}")
    if n < 1:
        raise DomainError(f"n must be at least 1, got {n}")

    real = rng.random(n) < prevalence
    informed = rng.random(n) < b
    guess = rng.random(n) < guess_bias
    pred = np.where(informed, real, guess)

    return from_counts(
        int(np.count_nonzero(real & pred)),
        int(np.count_nonzero(~real & pred)),
        int(np.count_nonzero(real & ~pred)),
        int(np.count_nonzero(~real & ~pred)),
    )


def measure_record(
    level: int,
    run: int,
    target_b: float,
    prevalence: float,
    guess_bias: float,
    counts: ContingencyCounts,
) -> StudyRecord:
    """Measure a generated table; undefined measures are recorded as None."""
    rates = normalize(counts)
    state = triviality(rates)
    if state != "non-trivial":
        logger.warning(
            "Run (%d, %d) produced a degenerate table %s: %s",
            level,
            run,
            counts.as_tuple(),
            state,
        )

    try:
        a, g, f = pr_means(rates)
    except UndefinedMeasureError:
        means: tuple[float | None, float | None, float | None] = (None, None, None)
    else:
        means = (a, g, f)

    return StudyRecord(
        level=level,
        run=run,
        target_b=target_b,
        prevalence=prevalence,
        guess_bias=guess_bias,
        counts=counts,
        informedness=_defined(informedness, rates),
        markedness=_defined(markedness, rates),
        correlation=_defined(correlation, rates),
        kappa=_defined(kappa, rates),
        f=means[2],
        g=means[1],
        a=means[0],
    )


def _simulate_run(cfg: StudyConfig, level: int, run: int) -> StudyRecord:
    rng = run_stream(cfg.seed, level, run)
    prevalence = float(rng.uniform(*cfg.prevalence_range))
    guess_bias = float(rng.uniform(*cfg.guess_bias_range))
    target_b = cfg.target(level)
    counts = generate_table(
        target_b, prevalence, guess_bias, cfg.instances_per_run, rng
    )
    logger.debug(
        "Run (%d, %d): b=%r, prevalence=%.3f, guess_bias=%.3f -> %s",
        level,
        run,
        target_b,
        prevalence,
        guess_bias,
        counts.as_tuple(),
    )
    return measure_record(level, run, target_b, prevalence, guess_bias, counts)


async def arun_study(cfg: StudyConfig) -> list[StudyRecord]:
    """
    Run every (level, run) of a study in worker threads.

    Each run owns the substream keyed by (seed, level, run) and its record is
    stored at a fixed index, so the output does not depend on scheduling.

    Returns:
        levels * runs_per_level records ordered by level, then run
    """
    runs = cfg.runs_per_level
    slots: list[StudyRecord | None] = [None] * (cfg.levels * runs)
    limiter = anyio.CapacityLimiter(cfg.workers) if cfg.workers else None

    async def _run(level: int, run: int) -> None:
        slots[level * runs + run] = await anyio.to_thread.run_sync(
            _simulate_run, cfg, level, run, limiter=limiter
        )

    logger.debug(
        "Starting study: %d levels x %d runs, n=%d, seed=%d",
        cfg.levels,
        runs,
        cfg.instances_per_run,
        cfg.seed,
    )
    # At most _BATCH_SIZE runs are queued at a time
    total = len(slots)
    for start in range(0, total, _BATCH_SIZE):
        async with anyio.create_task_group() as tg:
            for index in range(start, min(start + _BATCH_SIZE, total)):
                tg.start_soon(_run, *divmod(index, runs))
        logger.debug("Finished %d of %d runs", min(start + _BATCH_SIZE, total), total)

    records = [record for record in slots if record is not None]
    if len(records) != len(slots):
        raise BookmakerError("study finished with missing runs")
    return records


def run_study(cfg: StudyConfig) -> list[StudyRecord]:
    """Synchronous wrapper around arun_study."""
    return anyio.run(arun_study, cfg)


def _mean_absolute_error(pairs: Sequence[tuple[float, float]]) -> float | None:
    if not pairs:
        return None
    values = np.array(pairs, dtype=float)
    return float(np.mean(np.abs(values[:, 0] - values[:, 1])))


def summarize(records: Sequence[StudyRecord]) -> StudySummary:
    """
    Score every tracked measure against the target informedness and the
    measured correlation.

    Records where a measure is absent are left out of that measure's
    statistics only; a measure absent everywhere is summarized as all None.
    """
    if not records:
        raise DomainError("no records to summarize")

    summaries = []
    for name in MEASURE_NAMES:
        vs_target: list[tuple[float, float]] = []
        vs_correlation: list[tuple[float, float]] = []
        for record in records:
            value = record.measure(name)
            if value is None:
                continue
            vs_target.append((value, record.target_b))
            if record.correlation is not None:
                vs_correlation.append((value, record.correlation))

        slope: float | None = None
        intercept: float | None = None
        if vs_target:
            try:
                slope, intercept = least_squares_fit(
                    [target for _, target in vs_target],
                    [value for value, _ in vs_target],
                )
            except UndefinedMeasureError:
                logger.debug("No slope for %s: targets do not vary", name)

        summaries.append(
            MeasureSummary(
                measure=name,
                mae_vs_target=_mean_absolute_error(vs_target),
                mae_vs_correlation=_mean_absolute_error(vs_correlation),
                slope=slope,
                intercept=intercept,
            )
        )
    return StudySummary(measures=tuple(summaries))


def read_study_csv(path: str | Path) -> list[StudyRecord]:
    """Reload a study CSV, re-measuring each table from its recorded counts."""
    records = []
    for line, row in read_study_rows(path):
        try:
            counts = from_counts(
                int(row["tp"]), int(row["fp"]), int(row["fn"]), int(row["tn"])
            )
            records.append(
                measure_record(
                    level=int(row["level"]),
                    run=int(row["run"]),
                    target_b=float(row["target_b"]),
                    prevalence=float(row["prevalence"]),
                    guess_bias=float(row["guess_bias"]),
                    counts=counts,
                )
            )
        except (ValueError, DomainError) as e:
            raise InputFileError(path, line, str(e)) from e
    return records
