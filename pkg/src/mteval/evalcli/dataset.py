"""Annotated dataset ingestion.

Dataset files are UTF-8 TSV with a header row::

    id<TAB>source<TAB>reference<TAB>hypothesis<TAB>semantic<TAB>fluency[<TAB>overall]

Score cells may be empty (rows without an annotation for that dimension);
texts are normalized on load. The shared-task splits are 100 dev / 200 test
rows per language, so other row counts trigger a warning (never an error).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from ..errors import DataError
from ..textsim import normalize

REQUIRED_COLUMNS = ("id", "source", "reference", "hypothesis", "semantic", "fluency")
EXPECTED_SHAPES = (100, 200)


class DatasetShapeWarning(UserWarning):
    """Row count differs from the expected shared-task split sizes."""


@dataclass(frozen=True)
class SegmentPair:
    segment_id: str
    source: str
    reference: str
    hypothesis: str
    semantic: float | None
    fluency: float | None
    overall: float | None = None


@dataclass
class AnnotatedDataset:
    language_tag: str
    rows: list[SegmentPair]

    def __len__(self) -> int:
        return len(self.rows)

    def by_id(self) -> dict[str, SegmentPair]:
        return {row.segment_id: row for row in self.rows}

    def human_score(self, row: SegmentPair, dimension: str) -> float | None:
        """Annotation for one dimension; 'overall' falls back to the sem/flu mean."""
        if dimension == "semantic":
            return row.semantic
        if dimension == "fluency":
            return row.fluency
        if dimension == "overall":
            if row.overall is not None:
                return row.overall
            if row.semantic is not None and row.fluency is not None:
                return (row.semantic + row.fluency) / 2.0
            return None
        raise DataError(f"unknown annotation dimension: {dimension!r}")


def _parse_score(cell: str, path, lineno: int, column: str) -> float | None:
    cell = cell.strip()
    if not cell:
        return None
    try:
        value = float(cell)
    except ValueError:
        raise DataError(f"{path}:{lineno}: unparsable {column} score: {cell!r}") from None
    if value != value or value in (float("inf"), float("-inf")):
        raise DataError(f"{path}:{lineno}: non-finite {column} score")
    return value


def load_dataset(path, language_tag: str = "", expected_rows: int | None = None) -> AnnotatedDataset:
    """Parse and validate a dataset file; errors carry the offending line number."""
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise DataError(f"{path}: empty dataset file")
    header = lines[0].split("\t")
    if tuple(header[: len(REQUIRED_COLUMNS)]) != REQUIRED_COLUMNS:
        missing = [c for c in REQUIRED_COLUMNS if c not in header]
        raise DataError(f"{path}:1: bad header, missing columns {missing or header}")
    has_overall = len(header) > 6 and header[6] == "overall"
    n_cols = 7 if has_overall else 6

    rows: list[SegmentPair] = []
    seen: set[str] = set()
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        cells = line.split("\t")
        if len(cells) < n_cols:
            raise DataError(f"{path}:{lineno}: expected {n_cols} columns, got {len(cells)}")
        segment_id = cells[0].strip()
        if not segment_id:
            raise DataError(f"{path}:{lineno}: empty segment id")
        if segment_id in seen:
            raise DataError(f"{path}:{lineno}: duplicate segment id {segment_id!r}")
        seen.add(segment_id)
        rows.append(
            SegmentPair(
                segment_id=segment_id,
                source=normalize(cells[1]),
                reference=normalize(cells[2]),
                hypothesis=normalize(cells[3]),
                semantic=_parse_score(cells[4], path, lineno, "semantic"),
                fluency=_parse_score(cells[5], path, lineno, "fluency"),
                overall=_parse_score(cells[6], path, lineno, "overall") if has_overall else None,
            )
        )
    shapes = (expected_rows,) if expected_rows is not None else EXPECTED_SHAPES
    if len(rows) not in shapes:
        warnings.warn(
            f"{path}: {len(rows)} rows; expected {' or '.join(str(s) for s in shapes)}",
            DatasetShapeWarning,
            stacklevel=2,
        )
    return AnnotatedDataset(language_tag=language_tag, rows=rows)


def load_scores(path) -> dict[str, float]:
    """Read a score file: one `<id><TAB><score>` line per segment."""
    scores: dict[str, float] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh.read().splitlines(), start=1):
            if not line:
                continue
            seg_id, sep, value = line.partition("\t")
            if not sep:
                raise DataError(f"{path}:{lineno}: expected '<id><TAB><score>'")
            if seg_id in scores:
                raise DataError(f"{path}:{lineno}: duplicate segment id {seg_id!r}")
            try:
                scores[seg_id] = float(value)
            except ValueError:
                raise DataError(f"{path}:{lineno}: unparsable score {value!r}") from None
    return scores


def write_scores(scores: dict[str, float], path) -> None:
    """Write a score file with 4-decimal formatting, one segment per line."""
    with open(path, "w", encoding="utf-8") as fh:
        for seg_id, value in scores.items():
            fh.write(f"{seg_id}\t{value:.4f}\n")
