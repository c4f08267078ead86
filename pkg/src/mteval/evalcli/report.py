"""Correlation report: prediction-vs-annotation agreement per language and metric."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import DataError, ZeroVarianceError
from .correlation import pearson, spearman
from .dataset import AnnotatedDataset


@dataclass(frozen=True)
class CorrelationEntry:
    language: str
    metric: str  # "approach1".."approach6", "bleu", "chrf", "chrfpp"
    split: str  # "dev" | "test"
    dimension: str  # "semantic" | "fluency" | "overall"
    n: int
    pearson: float | None  # None when undefined (zero variance)
    spearman: float | None


def evaluate(
    predictions: dict[str, float],
    dataset: AnnotatedDataset,
    dimension: str = "overall",
    metric: str = "",
    split: str = "",
) -> CorrelationEntry:
    """Join predictions to annotations by segment id and correlate.

    Every prediction id must exist in the dataset; rows of the dataset that
    were not scored are ignored. Rows lacking the requested annotation
    dimension are an error.
    """
    by_id = dataset.by_id()
    missing = sorted(seg_id for seg_id in predictions if seg_id not in by_id)
    if missing:
        raise DataError(
            f"predictions reference ids absent from the dataset: {', '.join(missing[:10])}"
            + (f" (+{len(missing) - 10} more)" if len(missing) > 10 else "")
        )
    predicted = []
    human = []
    for seg_id in sorted(predictions):
        row = by_id[seg_id]
        score = dataset.human_score(row, dimension)
        if score is None:
            raise DataError(
                f"segment {seg_id!r} has no {dimension!r} annotation; cannot evaluate"
            )
        predicted.append(predictions[seg_id])
        human.append(score)
    try:
        p = pearson(predicted, human)
    except ZeroVarianceError:
        p = None
    try:
        s = spearman(predicted, human)
    except ZeroVarianceError:
        s = None
    return CorrelationEntry(
        language=dataset.language_tag, metric=metric, split=split,
        dimension=dimension, n=len(predicted), pearson=p, spearman=s,
    )


@dataclass
class EvalReport:
    entries: list[CorrelationEntry] = field(default_factory=list)

    def add(self, entry: CorrelationEntry) -> None:
        self.entries.append(entry)

    def languages(self) -> list[str]:
        return sorted({e.language for e in self.entries})

    def metrics(self) -> list[str]:
        seen = dict.fromkeys(e.metric for e in self.entries)
        return list(seen)

    def lookup(self, language: str, metric: str, split: str, dimension: str) -> CorrelationEntry | None:
        for e in self.entries:
            if (e.language, e.metric, e.split, e.dimension) == (language, metric, split, dimension):
                return e
        return None

    def averages(self, metric: str, split: str, dimension: str) -> tuple[float | None, float | None]:
        """Cross-language averages of (spearman, pearson); None if any is undefined."""
        spearmans = []
        pearsons = []
        for language in self.languages():
            entry = self.lookup(language, metric, split, dimension)
            if entry is None:
                continue
            spearmans.append(entry.spearman)
            pearsons.append(entry.pearson)
        if not spearmans:
            return None, None
        avg_s = None if any(v is None for v in spearmans) else sum(spearmans) / len(spearmans)
        avg_p = None if any(v is None for v in pearsons) else sum(pearsons) / len(pearsons)
        return avg_s, avg_p

    def to_tsv(self) -> str:
        lines = ["language\tmetric\tsplit\tdimension\tn\tpearson\tspearman"]
        for e in sorted(self.entries, key=lambda e: (e.split, e.dimension, e.metric, e.language)):
            lines.append(
                f"{e.language}\t{e.metric}\t{e.split}\t{e.dimension}\t{e.n}"
                f"\t{_fmt(e.pearson)}\t{_fmt(e.spearman)}"
            )
        for split in sorted({e.split for e in self.entries}):
            for dimension in sorted({e.dimension for e in self.entries if e.split == split}):
                for metric in self.metrics():
                    avg_s, avg_p = self.averages(metric, split, dimension)
                    if avg_s is None and avg_p is None:
                        continue
                    lines.append(
                        f"AVERAGE\t{metric}\t{split}\t{dimension}\t-"
                        f"\t{_fmt(avg_p)}\t{_fmt(avg_s)}"
                    )
        return "\n".join(lines) + "\n"

    def render_table(self, split: str, dimension: str) -> str:
        """Human-readable grid: one metric per row, Spearman/Pearson per language."""
        languages = [
            lang for lang in self.languages()
            if any(e.language == lang and e.split == split and e.dimension == dimension
                   for e in self.entries)
        ]
        if not languages:
            return ""
        header = ["metric"]
        for lang in languages:
            header += [f"{lang}:S", f"{lang}:P"]
        header += ["avg:S", "avg:P"]
        rows = [header]
        for metric in self.metrics():
            cells = [metric]
            found = False
            for lang in languages:
                entry = self.lookup(lang, metric, split, dimension)
                if entry is None:
                    cells += ["-", "-"]
                else:
                    found = True
                    cells += [_fmt(entry.spearman), _fmt(entry.pearson)]
            avg_s, avg_p = self.averages(metric, split, dimension)
            cells += [_fmt(avg_s), _fmt(avg_p)]
            if found:
                rows.append(cells)
        widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
        lines = [f"[{split} / {dimension}]"]
        for r in rows:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
        return "\n".join(lines) + "\n"


def _fmt(value: float | None) -> str:
    return "undefined" if value is None else f"{value:.4f}"
