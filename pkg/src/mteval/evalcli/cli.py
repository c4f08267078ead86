"""Command-line interface.

Subcommands: features, train, score, baseline, evaluate, pipeline.
Exit codes: 0 success, 1 usage error, 2 data error, 3 numeric/training error.
"""

from __future__ import annotations

import argparse
import sys

from ..errors import DataError, NumericError
from ..metrics import (
    FIXED_APPROACHES,
    SUPERVISED_APPROACHES,
    TrainingSettings,
    fixed_score,
    model_score,
    train_approach,
)
from ..mlcore import extract_features, load_model, save_model
from ..phonetics import PhoneticScheme
from .dataset import load_dataset, load_scores, write_scores
from .pipeline import BASELINES, ProviderConfig, build_provider, parse_config, run_pipeline
from .report import evaluate

USAGE_EXIT, DATA_EXIT, NUMERIC_EXIT = 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's default 2
        self.print_usage(sys.stderr)
        self.exit(USAGE_EXIT, f"{self.prog}: error: {message}\n")


def _add_provider_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--provider", choices=("hash", "store", "remote"), default="hash",
                        help="embedding backend (default: hash)")
    parser.add_argument("--store", help="embedding store path (store backend)")
    parser.add_argument("--endpoint", help="remote encoder URL (remote backend)")
    parser.add_argument("--hash-dim", type=int, default=256)
    parser.add_argument("--hash-ngram", type=int, default=3)


def _provider_from_args(args) -> object:
    from pathlib import Path

    return build_provider(
        ProviderConfig(
            backend=args.provider,
            dim=args.hash_dim,
            ngram=args.hash_ngram,
            store_path=Path(args.store) if args.store else None,
            endpoint=args.endpoint or "",
        )
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="mteval", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("features", parents=[], help="dump feature vectors as TSV")
    p.add_argument("--data", required=True)
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--scheme", choices=[s.value for s in PhoneticScheme],
                   default=PhoneticScheme.SOUNDEX_METAPHONE.value)
    _add_provider_args(p)

    p = sub.add_parser("train", help="train a supervised approach on a dev set")
    p.add_argument("--approach", type=int, required=True, choices=SUPERVISED_APPROACHES)
    p.add_argument("--data", required=True, help="annotated dev TSV")
    p.add_argument("--model", required=True, help="output model path")
    p.add_argument("--language", default="", help="language tag recorded in the model")
    p.add_argument("--ridge-lambda", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    _add_provider_args(p)

    p = sub.add_parser("score", help="score a dataset with one approach")
    p.add_argument("--approach", type=int, required=True,
                   choices=FIXED_APPROACHES + SUPERVISED_APPROACHES)
    p.add_argument("--data", required=True)
    p.add_argument("--out", required=True, help="score file path")
    p.add_argument("--model", help="trained model (approaches 4-6)")
    _add_provider_args(p)

    p = sub.add_parser("baseline", help="score a dataset with a baseline metric")
    p.add_argument("--metric", required=True, choices=sorted(BASELINES))
    p.add_argument("--data", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("evaluate", help="correlate a score file against annotations")
    p.add_argument("--pred", required=True, help="score file")
    p.add_argument("--data", required=True, help="annotated dataset")
    p.add_argument("--dimension", choices=("semantic", "fluency", "overall"),
                   default="overall")

    p = sub.add_parser("pipeline", help="run the full pipeline from a config file")
    p.add_argument("--config", required=True)
    return parser


def _cmd_features(args) -> int:
    dataset = load_dataset(args.data)
    provider = _provider_from_args(args)
    scheme = PhoneticScheme(args.scheme)
    lines = ["id\tlexical\tphonetic\tsemantic\tfuzzy"]
    for row in dataset.rows:
        f = extract_features(row.reference, row.hypothesis, provider, scheme)
        lines.append(f"{row.segment_id}\t{f.lexical:.6f}\t{f.phonetic:.6f}\t{f.semantic:.6f}\t{f.fuzzy:.6f}")
    text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_train(args) -> int:
    dataset = load_dataset(args.data, language_tag=args.language)
    provider = _provider_from_args(args)
    pairs, sem, flu = [], [], []
    for row in dataset.rows:
        if row.semantic is None or row.fluency is None:
            raise DataError(f"segment {row.segment_id!r} lacks training annotations")
        pairs.append((row.reference, row.hypothesis))
        sem.append(row.semantic)
        flu.append(row.fluency)
    settings = TrainingSettings(ridge_lambda=args.ridge_lambda, seed=args.seed)
    model = train_approach(args.approach, pairs, sem, flu, provider, settings,
                           language_tag=args.language)
    save_model(model, args.model)
    print(f"trained approach {args.approach} on {len(pairs)} rows -> {args.model}")
    return 0


def _cmd_score(args) -> int:
    dataset = load_dataset(args.data)
    provider = _provider_from_args(args)
    if args.approach in FIXED_APPROACHES:
        scores = {
            row.segment_id: fixed_score(args.approach, row.reference, row.hypothesis, provider)
            for row in dataset.rows
        }
    else:
        if not args.model:
            raise DataError(f"approach {args.approach} needs --model <trained model>")
        model = load_model(args.model)
        if model.approach != args.approach:
            raise DataError(
                f"model file is for approach {model.approach}, not {args.approach}"
            )
        scores = {
            row.segment_id: model_score(model, row.reference, row.hypothesis, provider)
            for row in dataset.rows
        }
    write_scores(scores, args.out)
    print(f"wrote {len(scores)} scores -> {args.out}")
    return 0


def _cmd_baseline(args) -> int:
    dataset = load_dataset(args.data)
    metric = BASELINES[args.metric]
    scores = {row.segment_id: metric(row.reference, row.hypothesis) for row in dataset.rows}
    write_scores(scores, args.out)
    print(f"wrote {len(scores)} scores -> {args.out}")
    return 0


def _cmd_evaluate(args) -> int:
    predictions = load_scores(args.pred)
    dataset = load_dataset(args.data)
    entry = evaluate(predictions, dataset, args.dimension)
    pearson = "undefined" if entry.pearson is None else f"{entry.pearson:.4f}"
    spearman = "undefined" if entry.spearman is None else f"{entry.spearman:.4f}"
    print(f"n={entry.n} dimension={entry.dimension} pearson={pearson} spearman={spearman}")
    return 0


def _cmd_pipeline(args) -> int:
    config = parse_config(args.config)
    result = run_pipeline(config)
    splits = sorted({e.split for e in result.report.entries})
    for split in splits:
        table = result.report.render_table(split, config.target)
        if table:
            print(table)
    print(f"report: {result.report_file}")
    return 0


_COMMANDS = {
    "features": _cmd_features,
    "train": _cmd_train,
    "score": _cmd_score,
    "baseline": _cmd_baseline,
    "evaluate": _cmd_evaluate,
    "pipeline": _cmd_pipeline,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_EXIT
    except NumericError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NUMERIC_EXIT


if __name__ == "__main__":
    sys.exit(main())
