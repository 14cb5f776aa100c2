"""Command-line front end: metrics reports, ROC sweeps and Monte Carlo studies.

Exit codes: 0 on success, 2 on input errors, 1 on internal errors.
"""

import argparse
import logging
import sys
from collections.abc import Iterator, Sequence
from contextlib import ExitStack, contextmanager
from pathlib import Path
from typing import IO

from ._errors import BookmakerError, InputFileError, UndefinedMeasureError
from ._internal.readers import read_labels, read_scores
from ._internal.serialize import (
    STUDY_COLUMNS,
    SUMMARY_COLUMNS,
    SWEEP_COLUMNS,
    report_json,
    report_rows,
    study_rows,
    summary_rows,
    sweep_rows,
    write_csv,
)
from ._version import __version__
from .association import association_report, weighted_relative_accuracy
from .contingency import from_counts, from_labels, normalize, skew, triviality
from .measures import surface_report
from .roc import auc_single, curve_auc, roc_point, sweep
from .simulate import read_study_csv, run_study, summarize
from .types import ContingencyCounts, Report, ReportFormat, StudyConfig

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INTERNAL_ERROR = 1
EXIT_INPUT_ERROR = 2


def build_report(counts: ContingencyCounts) -> Report:
    """Collect every in-scope measure of one table."""
    rates = normalize(counts)
    try:
        point = roc_point(rates)
    except UndefinedMeasureError:
        point = None
    try:
        class_skew: float | None = skew(rates)
    except UndefinedMeasureError:
        class_skew = None

    return Report(
        counts=counts,
        triviality=triviality(rates),
        surface=surface_report(rates),
        association=association_report(rates),
        roc_point=point,
        auc=auc_single(point) if point is not None else None,
        prevalence=rates.rp,
        bias=rates.pp,
        skew=class_skew,
        wracc=weighted_relative_accuracy(rates),
    )


@contextmanager
def _output(path: Path | None) -> Iterator[IO[str]]:
    if path is None:
        yield sys.stdout
        return
    try:
        f = path.open("w", newline="", encoding="utf-8")
    except OSError as e:
        raise InputFileError(path, None, f"cannot write file: {e}") from e
    with f:
        yield f


def cmd_metrics(args: argparse.Namespace) -> int:
    if args.counts is not None:
        counts = from_counts(*args.counts)
    else:
        gold, pred = read_labels(args.labels)
        counts = from_labels(gold, pred)

    report = build_report(counts)
    report_format: ReportFormat = args.format
    match report_format:
        case "json":
            sys.stdout.write(report_json(report) + "\n")
        case "csv":
            write_csv(sys.stdout, ("field", "value"), report_rows(report))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    gold, scores = read_scores(args.scores)
    curve = sweep(gold, scores)
    write_csv(sys.stdout, SWEEP_COLUMNS, sweep_rows(curve))
    sys.stdout.write(f"auc,{curve_auc(curve)!r}\n")
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    if args.source is not None:
        records = read_study_csv(args.source)
        logger.info("Loaded %d records from %s", len(records), args.source)
        with _output(args.summary) as f:
            write_csv(f, SUMMARY_COLUMNS, summary_rows(summarize(records)))
        return EXIT_OK

    config = StudyConfig(
        levels=args.levels,
        runs_per_level=args.runs,
        instances_per_run=args.n,
        prevalence_range=args.prevalence,
        guess_bias_range=args.guess_bias,
        seed=args.seed,
        workers=args.workers,
    )
    with ExitStack() as stack:
        # Outputs are opened before the study runs
        study_out = stack.enter_context(_output(args.out))
        summary_out = (
            None if args.summary is None else stack.enter_context(_output(args.summary))
        )
        records = run_study(config)
        write_csv(study_out, STUDY_COLUMNS, study_rows(records))
        if summary_out is not None:
            write_csv(summary_out, SUMMARY_COLUMNS, summary_rows(summarize(records)))
    return EXIT_OK


def _counts_arg(value: str) -> tuple[int, int, int, int]:
    parts = value.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected A,B,C,D, got {value!r}")
    try:
        a, b, c, d = (int(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"counts must be integers, got {value!r}"
        ) from None
    return a, b, c, d


def _range_arg(value: str) -> tuple[float, float]:
    parts = value.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected LO,HI, got {value!r}")
    try:
        low, high = (float(part) for part in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"range bounds must be numbers, got {value!r}"
        ) from None
    return low, high


def build_parser() -> argparse.ArgumentParser:
    defaults = StudyConfig()
    parser = argparse.ArgumentParser(
        prog="bookmaker",
        description="Evaluate dichotomous contingency tables with biased and unbiased measures.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log debug output to stderr"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    metrics = commands.add_parser("metrics", help="report every measure of one table")
    source = metrics.add_mutually_exclusive_group(required=True)
    source.add_argument("--counts", type=_counts_arg, metavar="A,B,C,D")
    source.add_argument("--labels", type=Path, metavar="PATH")
    metrics.add_argument("--format", choices=("json", "csv"), default="json")
    metrics.set_defaults(handler=cmd_metrics)

    sweeper = commands.add_parser("sweep", help="trace the ROC curve of a score file")
    sweeper.add_argument("--scores", type=Path, required=True, metavar="PATH")
    sweeper.set_defaults(handler=cmd_sweep)

    simulate = commands.add_parser("simulate", help="run the Monte Carlo study")
    simulate.add_argument("--levels", type=int, default=defaults.levels)
    simulate.add_argument("--runs", type=int, default=defaults.runs_per_level)
    simulate.add_argument("--n", type=int, default=defaults.instances_per_run)
    simulate.add_argument("--seed", type=int, default=defaults.seed)
    simulate.add_argument(
        "--prevalence",
        type=_range_arg,
        default=defaults.prevalence_range,
        metavar="LO,HI",
    )
    simulate.add_argument(
        "--guess-bias",
        type=_range_arg,
        default=defaults.guess_bias_range,
        metavar="LO,HI",
    )
    simulate.add_argument("--workers", type=int, default=None)
    simulate.add_argument(
        "--out", type=Path, default=None, metavar="PATH", help="study CSV (default stdout)"
    )
    simulate.add_argument("--summary", type=Path, default=None, metavar="PATH")
    simulate.add_argument(
        "--from",
        dest="source",
        type=Path,
        default=None,
        metavar="PATH",
        help="summarize an existing study CSV instead of simulating",
    )
    simulate.set_defaults(handler=cmd_simulate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        code: int = args.handler(args)
    except BookmakerError as e:
        print(f"bookmaker: error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except Exception:
        logger.exception("Internal error")
        return EXIT_INTERNAL_ERROR
    return code
