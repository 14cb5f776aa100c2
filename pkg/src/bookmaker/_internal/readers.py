"""Parsers for label, score and study CSV files."""

import csv
import logging
import math
from collections.abc import Iterator
from pathlib import Path

from .._errors import InputFileError
from .serialize import STUDY_COLUMNS

logger = logging.getLogger(__name__)

_BINARY = {"0": False, "1": True}


def _rows(path: Path, header: tuple[str, ...]) -> Iterator[tuple[int, list[str]]]:
    """Yield (line number, cells) for every data row after checking the header."""
    try:
        with path.open(newline="", encoding="utf-8-sig") as f:
            reader = csv.reader(f)
            try:
                first = next(reader)
            except StopIteration:
                raise InputFileError(path, 1, "file is empty") from None
            found = tuple(cell.strip() for cell in first)
            if found != header:
                raise InputFileError(
                    path, 1, f"expected header {','.join(header)!r}, got {','.join(found)!r}"
                )
            for row in reader:
                # Skip blank lines
                if not row or all(not cell.strip() for cell in row):
                    continue
                if len(row) != len(header):
                    raise InputFileError(
                        path,
                        reader.line_num,
                        f"expected {len(header)} fields, got {len(row)}",
                    )
                yield reader.line_num, [cell.strip() for cell in row]
    except OSError as e:
        raise InputFileError(path, None, f"cannot read file: {e}") from e
    except csv.Error as e:
        raise InputFileError(path, None, f"malformed CSV: {e}") from e
    except UnicodeDecodeError as e:
        # Decoding runs ahead of the csv reader, so no reliable line number
        raise InputFileError(path, None, f"invalid UTF-8: {e.reason}") from e


def _binary(path: Path, line: int, column: str, value: str) -> bool:
    try:
        return _BINARY[value]
    except KeyError:
        raise InputFileError(
            path, line, f"{column} must be 0 or 1, got {value!r}"
        ) from None


def read_labels(path: str | Path) -> tuple[list[bool], list[bool]]:
    """
    Read a `gold,pred` label file.

    Args:
        path: CSV file with header `gold,pred` and values in {0, 1}

    Returns:
        (gold, pred) as parallel boolean lists

    Raises:
        InputFileError: If the file is unreadable or holds a non-binary value
    """
    path = Path(path)
    gold: list[bool] = []
    pred: list[bool] = []
    for line, (gold_cell, pred_cell) in _rows(path, ("gold", "pred")):
        gold.append(_binary(path, line, "gold", gold_cell))
        pred.append(_binary(path, line, "pred", pred_cell))
    logger.debug("Read %d labels from %s", len(gold), path)
    return gold, pred


def read_scores(path: str | Path) -> tuple[list[bool], list[float]]:
    """Read a `gold,score` file; scores must be finite reals."""
    path = Path(path)
    gold: list[bool] = []
    scores: list[float] = []
    for line, (gold_cell, score_cell) in _rows(path, ("gold", "score")):
        gold.append(_binary(path, line, "gold", gold_cell))
        try:
            score = float(score_cell)
        except ValueError:
            raise InputFileError(
                path, line, f"score must be a real number, got {score_cell!r}"
            ) from None
        if not math.isfinite(score):
            raise InputFileError(path, line, f"score must be finite, got {score_cell!r}")
        scores.append(score)
    logger.debug("Read %d scores from %s", len(scores), path)
    return gold, scores


def read_study_rows(path: str | Path) -> list[tuple[int, dict[str, str]]]:
    """Read the raw cells of a study CSV as (line number, cells by column)."""
    path = Path(path)
    return [
        (line, dict(zip(STUDY_COLUMNS, cells, strict=True)))
        for line, cells in _rows(path, STUDY_COLUMNS)
    ]
