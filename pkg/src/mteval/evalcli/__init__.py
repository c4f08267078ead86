"""Dataset ingestion, correlation harness, pipeline, and CLI."""

from .correlation import average_ranks, pearson, spearman
from .dataset import AnnotatedDataset, SegmentPair, load_dataset, load_scores, write_scores
from .pipeline import PipelineConfig, parse_config, run_pipeline
from .report import CorrelationEntry, EvalReport, evaluate

__all__ = [
    "pearson",
    "spearman",
    "average_ranks",
    "AnnotatedDataset",
    "SegmentPair",
    "load_dataset",
    "load_scores",
    "write_scores",
    "CorrelationEntry",
    "EvalReport",
    "evaluate",
    "PipelineConfig",
    "parse_config",
    "run_pipeline",
]
