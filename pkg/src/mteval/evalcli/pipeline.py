"""End-to-end pipeline: load datasets, train, score, correlate, report.

Configuration is a flat ``key = value`` text file ('#' starts a comment;
paths are resolved relative to the config file). Recognized keys:

    output_dir            where score files, models, and the report go
    seed                  64-bit seed driving all resampling (default 0)
    approaches            comma list out of 1..6 (default: all six)
    baselines             comma list out of bleu,chrf,chrfpp (default: none)
    target                overall | semantic | fluency (default: overall)
    pool_languages        true trains one model on all languages' dev rows
    provider              hash | store | remote (default: hash)
    provider.dim          hash backend: bucket count (default 256)
    provider.ngram        hash backend: n-gram order (default 3)
    provider.store        store backend: embedding store path
    provider.endpoint     remote backend: encoder URL
    provider.timeout      remote backend: seconds (default 10)
    provider.retries      remote backend: retry count (default 2)
    ridge.lambda          ridge penalty (default 1.0)
    rf.n_trees rf.max_depth rf.min_leaf rf.subsample rf.feature_fraction
    gbr.n_trees gbr.max_depth gbr.min_leaf gbr.learning_rate
    dataset.<lang>.dev    dev split path (required per language)
    dataset.<lang>.test   test split path (optional)

A rerun with an identical config and seed produces byte-identical score
files, model files, and report. Any stage failure removes the files written
so far and aborts with a stage-labeled error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..errors import DataError, MtevalError, NumericError
from ..metrics import (
    ALL_APPROACHES,
    FIXED_APPROACHES,
    SUPERVISED_APPROACHES,
    TrainingSettings,
    bleu,
    chrf,
    chrf_pp,
    fixed_score,
    model_score,
    train_approach,
)
from ..mlcore import BoostingParams, ForestParams, save_model
from ..semantics import HashedNgramProvider, RemoteProvider, StoreProvider, load_store
from .dataset import AnnotatedDataset, load_dataset, write_scores
from .report import EvalReport, evaluate

BASELINES = {"bleu": bleu, "chrf": chrf, "chrfpp": chrf_pp}
DIMENSIONS = ("semantic", "fluency", "overall")


@dataclass
class ProviderConfig:
    backend: str = "hash"
    dim: int = 256
    ngram: int = 3
    store_path: Path | None = None
    endpoint: str = ""
    timeout: float = 10.0
    retries: int = 2


@dataclass
class PipelineConfig:
    output_dir: Path
    datasets: dict[str, dict[str, Path]]  # language -> {"dev": path, "test": path}
    approaches: tuple[int, ...] = ALL_APPROACHES
    baselines: tuple[str, ...] = ()
    target: str = "overall"
    pool_languages: bool = False
    provider: ProviderConfig = field(default_factory=ProviderConfig)
    training: TrainingSettings = field(default_factory=TrainingSettings)


def _parse_bool(value: str, key: str) -> bool:
    lowered = value.lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise DataError(f"config key {key}: expected a boolean, got {value!r}")


def _parse_number(value: str, key: str, cast):
    try:
        return cast(value)
    except ValueError:
        raise DataError(f"config key {key}: expected a number, got {value!r}") from None


def parse_config(path) -> PipelineConfig:
    """Parse the key-value config file into a validated PipelineConfig."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read config file: {exc}") from None
    base = path.parent
    pairs: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise DataError(f"{path}:{lineno}: expected 'key = value'")
        pairs[key.strip()] = value.strip()

    datasets: dict[str, dict[str, Path]] = {}
    provider = ProviderConfig()
    forest = {}
    boosting = {}
    ridge_lambda = 1.0
    seed = 0
    approaches: tuple[int, ...] = ALL_APPROACHES
    baselines: tuple[str, ...] = ()
    target = "overall"
    pool = False
    output_dir: Path | None = None

    for key, value in pairs.items():
        if key == "output_dir":
            output_dir = base / value
        elif key == "seed":
            seed = _parse_number(value, key, int)
        elif key == "approaches":
            try:
                approaches = tuple(sorted({int(v) for v in value.split(",") if v.strip()}))
            except ValueError:
                raise DataError(f"config key {key}: expected comma-separated ids") from None
            bad = [a for a in approaches if a not in ALL_APPROACHES]
            if bad:
                raise DataError(f"config key {key}: unknown approaches {bad}")
        elif key == "baselines":
            baselines = tuple(v.strip() for v in value.split(",") if v.strip())
            bad = [b for b in baselines if b not in BASELINES]
            if bad:
                raise DataError(f"config key {key}: unknown baselines {bad}")
        elif key == "target":
            if value not in DIMENSIONS:
                raise DataError(f"config key {key}: must be one of {DIMENSIONS}")
            target = value
        elif key == "pool_languages":
            pool = _parse_bool(value, key)
        elif key == "provider":
            if value not in ("hash", "store", "remote"):
                raise DataError(f"config key {key}: must be hash, store, or remote")
            provider.backend = value
        elif key == "provider.dim":
            provider.dim = _parse_number(value, key, int)
        elif key == "provider.ngram":
            provider.ngram = _parse_number(value, key, int)
        elif key == "provider.store":
            provider.store_path = base / value
        elif key == "provider.endpoint":
            provider.endpoint = value
        elif key == "provider.timeout":
            provider.timeout = _parse_number(value, key, float)
        elif key == "provider.retries":
            provider.retries = _parse_number(value, key, int)
        elif key == "ridge.lambda":
            ridge_lambda = _parse_number(value, key, float)
        elif key.startswith("rf."):
            forest[key[3:]] = value
        elif key.startswith("gbr."):
            boosting[key[4:]] = value
        elif key.startswith("dataset."):
            parts = key.split(".")
            if len(parts) != 3 or parts[2] not in ("dev", "test"):
                raise DataError(f"config key {key}: expected dataset.<lang>.dev or .test")
            datasets.setdefault(parts[1], {})[parts[2]] = base / value
        else:
            raise DataError(f"unknown config key: {key}")

    if output_dir is None:
        raise DataError("config is missing required key 'output_dir'")
    if not datasets:
        raise DataError("config defines no datasets (dataset.<lang>.dev = <path>)")
    for lang, splits in datasets.items():
        if "dev" not in splits:
            raise DataError(f"language {lang!r} has no dev split configured")

    def forest_params() -> ForestParams:
        defaults = ForestParams()
        return ForestParams(
            n_trees=_parse_number(forest.get("n_trees", str(defaults.n_trees)), "rf.n_trees", int),
            max_depth=None
            if forest.get("max_depth", "").lower() == "none"
            else _parse_number(forest.get("max_depth", str(defaults.max_depth)), "rf.max_depth", int),
            min_leaf=_parse_number(forest.get("min_leaf", str(defaults.min_leaf)), "rf.min_leaf", int),
            subsample=_parse_number(forest.get("subsample", str(defaults.subsample)), "rf.subsample", float),
            feature_fraction=_parse_number(
                forest.get("feature_fraction", str(defaults.feature_fraction)), "rf.feature_fraction", float
            ),
        )

    def boosting_params() -> BoostingParams:
        defaults = BoostingParams()
        return BoostingParams(
            n_trees=_parse_number(boosting.get("n_trees", str(defaults.n_trees)), "gbr.n_trees", int),
            max_depth=None
            if boosting.get("max_depth", "").lower() == "none"
            else _parse_number(boosting.get("max_depth", str(defaults.max_depth)), "gbr.max_depth", int),
            min_leaf=_parse_number(boosting.get("min_leaf", str(defaults.min_leaf)), "gbr.min_leaf", int),
            learning_rate=_parse_number(
                boosting.get("learning_rate", str(defaults.learning_rate)), "gbr.learning_rate", float
            ),
        )

    unknown_rf = set(forest) - {"n_trees", "max_depth", "min_leaf", "subsample", "feature_fraction"}
    if unknown_rf:
        raise DataError(f"unknown rf.* config keys: {sorted(unknown_rf)}")
    unknown_gbr = set(boosting) - {"n_trees", "max_depth", "min_leaf", "learning_rate"}
    if unknown_gbr:
        raise DataError(f"unknown gbr.* config keys: {sorted(unknown_gbr)}")

    return PipelineConfig(
        output_dir=output_dir,
        datasets=datasets,
        approaches=approaches,
        baselines=baselines,
        target=target,
        pool_languages=pool,
        provider=provider,
        training=TrainingSettings(
            ridge_lambda=ridge_lambda,
            forest=forest_params(),
            boosting=boosting_params(),
            seed=seed,
        ),
    )


def build_provider(config: ProviderConfig):
    if config.backend == "hash":
        return HashedNgramProvider(dim=config.dim, n=config.ngram)
    if config.backend == "store":
        if config.store_path is None:
            raise DataError("store provider needs provider.store = <path>")
        return StoreProvider(load_store(config.store_path))
    if config.backend == "remote":
        if not config.endpoint:
            raise DataError("remote provider needs provider.endpoint = <url>")
        return RemoteProvider(config.endpoint, timeout=config.timeout, retries=config.retries)
    raise DataError(f"unknown provider backend: {config.backend!r}")


@dataclass
class PipelineResult:
    report: EvalReport
    score_files: list[Path]
    model_files: list[Path]
    report_file: Path


def _training_rows(datasets: list[AnnotatedDataset]):
    pairs = []
    sem = []
    flu = []
    for dataset in datasets:
        for row in dataset.rows:
            if row.semantic is None or row.fluency is None:
                raise DataError(
                    f"dev segment {row.segment_id!r} ({dataset.language_tag}) lacks "
                    "semantic/fluency annotations required for training"
                )
            pairs.append((row.reference, row.hypothesis))
            sem.append(row.semantic)
            flu.append(row.fluency)
    return pairs, sem, flu


def _evaluable_dimensions(dataset: AnnotatedDataset, target: str) -> list[str]:
    wanted = list(dict.fromkeys(["semantic", "fluency", target]))
    out = []
    for dimension in wanted:
        if all(dataset.human_score(row, dimension) is not None for row in dataset.rows):
            out.append(dimension)
    return out


def run_pipeline(config: PipelineConfig) -> PipelineResult:
    """Execute the full pipeline; on failure, remove partial outputs."""
    written: list[Path] = []
    try:
        return _run(config, written)
    except MtevalError as exc:
        for path in written:
            path.unlink(missing_ok=True)
        raise
    except Exception as exc:  # defensive: never leave partial outputs behind
        for path in written:
            path.unlink(missing_ok=True)
        raise NumericError(f"[pipeline] unexpected failure: {exc}") from exc


def _stage(stage: str, exc: MtevalError) -> MtevalError:
    cls = DataError if isinstance(exc, DataError) else NumericError
    return cls(f"[{stage}] {exc}")


def _run(config: PipelineConfig, written: list[Path]) -> PipelineResult:
    out_dir = config.output_dir
    scores_dir = out_dir / "scores"
    models_dir = out_dir / "models"

    # stage: load datasets
    datasets: dict[str, dict[str, AnnotatedDataset]] = {}
    expected = {"dev": 100, "test": 200}
    try:
        for lang in sorted(config.datasets):
            datasets[lang] = {}
            for split, path in sorted(config.datasets[lang].items()):
                datasets[lang][split] = load_dataset(
                    path, language_tag=lang, expected_rows=expected[split]
                )
    except MtevalError as exc:
        raise _stage("load-datasets", exc) from None

    # stage: provider
    try:
        provider = build_provider(config.provider)
        if hasattr(provider, "prefetch"):
            texts = []
            for lang in sorted(datasets):
                for split in sorted(datasets[lang]):
                    for row in datasets[lang][split].rows:
                        texts += [row.reference, row.hypothesis]
            provider.prefetch([t for t in dict.fromkeys(texts) if t])
    except MtevalError as exc:
        raise _stage("provider", exc) from None

    scores_dir.mkdir(parents=True, exist_ok=True)
    report = EvalReport()
    score_files: list[Path] = []
    model_files: list[Path] = []

    def score_split(metric: str, lang: str, split: str, scorer) -> None:
        dataset = datasets[lang][split]
        try:
            scores = {row.segment_id: scorer(row) for row in dataset.rows}
        except MtevalError as exc:
            raise _stage(f"score:{metric}:{lang}:{split}", exc) from None
        path = scores_dir / f"{lang}.{split}.{metric}.tsv"
        write_scores(scores, path)
        written.append(path)
        score_files.append(path)
        for dimension in _evaluable_dimensions(dataset, config.target):
            try:
                report.add(evaluate(scores, dataset, dimension, metric=metric, split=split))
            except MtevalError as exc:
                raise _stage(f"evaluate:{metric}:{lang}:{split}", exc) from None

    for approach in config.approaches:
        metric = f"approach{approach}"
        if approach in FIXED_APPROACHES:
            for lang in sorted(datasets):
                for split in sorted(datasets[lang]):
                    score_split(
                        metric, lang, split,
                        lambda row, a=approach: fixed_score(a, row.reference, row.hypothesis, provider),
                    )
        else:
            models_dir.mkdir(parents=True, exist_ok=True)
            trained = {}
            try:
                if config.pool_languages:
                    pairs, sem, flu = _training_rows(
                        [datasets[lang]["dev"] for lang in sorted(datasets)]
                    )
                    model = train_approach(
                        approach, pairs, sem, flu, provider, config.training,
                        language_tag="pooled",
                    )
                    for lang in sorted(datasets):
                        trained[lang] = model
                    path = models_dir / f"pooled.{metric}.json"
                    save_model(model, path)
                    written.append(path)
                    model_files.append(path)
                else:
                    for lang in sorted(datasets):
                        pairs, sem, flu = _training_rows([datasets[lang]["dev"]])
                        model = train_approach(
                            approach, pairs, sem, flu, provider, config.training,
                            language_tag=lang,
                        )
                        trained[lang] = model
                        path = models_dir / f"{lang}.{metric}.json"
                        save_model(model, path)
                        written.append(path)
                        model_files.append(path)
            except MtevalError as exc:
                raise _stage(f"train:{metric}", exc) from None
            for lang in sorted(datasets):
                for split in sorted(datasets[lang]):
                    score_split(
                        metric, lang, split,
                        lambda row, m=trained[lang]: model_score(m, row.reference, row.hypothesis, provider),
                    )

    for baseline in config.baselines:
        scorer_fn = BASELINES[baseline]
        for lang in sorted(datasets):
            for split in sorted(datasets[lang]):
                score_split(
                    baseline, lang, split,
                    lambda row, fn=scorer_fn: fn(row.reference, row.hypothesis),
                )

    report_file = out_dir / "report.tsv"
    report_file.write_text(report.to_tsv(), encoding="utf-8")
    written.append(report_file)
    return PipelineResult(
        report=report, score_files=score_files,
        model_files=model_files, report_file=report_file,
    )
