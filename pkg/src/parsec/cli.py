"""Command-line experiment harness.

Exit codes: 0 success, 2 configuration error, 3 infeasible compression
bounds, 4 corpus/model IO or parse error.
"""

from __future__ import annotations

import functools
import sys
from pathlib import Path

import click

from .compressor import InvariantViolation, ParseError, deserialize_model, serialize_model
from .corpus import CorpusFormatError, TooFewInstances, split_train_test
from .corpus import write_tagged_corpus
from .evolution import InitializationFailure, fitness, precompute_baseline
from .evolution import evolve as run_evolution
from .experiment import (
    ConfigError,
    ExperimentConfig,
    apply_setting,
    build_manifest,
    evaluate_model,
    load_analyzer_inputs,
    load_config,
    manifest_to_json,
    read_corpus_file,
    split_for_eval,
)
from .matching import CorpusMatcher
from .reporting import rows_from_csv, rows_to_csv, rows_to_table
from .sentiment import BaselineAnalyzer, LexiconFormatError

EXIT_CONFIG = 2
EXIT_INFEASIBLE = 3
EXIT_IO = 4


def _fail(message: str, code: int):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _guarded(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            fn(*args, **kwargs)
        except ConfigError as e:
            _fail(str(e), EXIT_CONFIG)
        except TooFewInstances as e:
            _fail(str(e), EXIT_CONFIG)
        except InitializationFailure as e:
            _fail(str(e), EXIT_INFEASIBLE)
        except (CorpusFormatError, ParseError, InvariantViolation, LexiconFormatError) as e:
            _fail(str(e), EXIT_IO)
        except OSError as e:
            _fail(str(e), EXIT_IO)

    return wrapper


def _experiment_options(fn):
    decorators = [
        click.option("--config", "config_path", type=str, default=None, help="Flat key=value config file."),
        click.option("--corpus", "corpus_paths", type=str, multiple=True, help="Tagged corpus file; repeatable."),
        click.option("--lexicon", type=str, default=None),
        click.option("--negations", type=str, default=None),
        click.option("--lcb", type=float, default=None, help="Lower compression bound, percent."),
        click.option("--ucb", type=float, default=None, help="Upper compression bound, percent."),
        click.option("--rules-min", type=int, default=None),
        click.option("--rules-max", type=int, default=None),
        click.option("--pop", type=int, default=None, help="Population size."),
        click.option("--gens", type=int, default=None, help="Generation count."),
        click.option("--seed", type=int, default=None),
        click.option("--train-fraction", type=float, default=None),
        click.option("--out", type=str, default=None, help="Output directory or file."),
        click.option("--format", "report_format", type=click.Choice(["table", "csv"]), default=None),
    ]
    for dec in reversed(decorators):
        fn = dec(fn)
    return fn


_FLAG_TO_KEY = {
    "lexicon": "lexicon",
    "negations": "negations",
    "lcb": "lcb",
    "ucb": "ucb",
    "rules_min": "rules_min",
    "rules_max": "rules_max",
    "pop": "population_size",
    "gens": "generations",
    "seed": "seed",
    "train_fraction": "train_fraction",
    "out": "out",
    "report_format": "format",
}


def _assemble_config(config_path, corpus_paths, **flags) -> ExperimentConfig:
    config = load_config(config_path) if config_path else ExperimentConfig()
    if corpus_paths:
        config.corpus_paths = tuple(corpus_paths)
    for flag, key in _FLAG_TO_KEY.items():
        value = flags.get(flag)
        if value is not None:
            apply_setting(config, key, str(value))
    return config


def _read_corpus(path: str):
    try:
        return read_corpus_file(path)
    except FileNotFoundError:
        raise ConfigError(f"corpus file does not exist: {path}") from None


def _load_model(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigError(f"model file does not exist: {path}") from None
    return deserialize_model(text)


@click.group()
def main():
    """Evolve and apply rule-based POS-pattern text compressors."""


@main.command(name="evolve")
@_experiment_options
@_guarded
def evolve_cmd(config_path, corpus_paths, **flags):
    """Train a compressor on the train split and write model + manifest."""
    config = _assemble_config(config_path, corpus_paths, **flags)
    if len(config.corpus_paths) != 1:
        raise ConfigError("evolve needs exactly one --corpus")
    params = config.params()

    corpus, digest = _read_corpus(config.corpus_paths[0])
    lexicon, negations = load_analyzer_inputs(config)
    train, test = split_train_test(corpus, config.train_fraction, params.seed)
    baseline = precompute_baseline(train, lexicon, negations)

    best, history = run_evolution(params, train, baseline)
    best_report = fitness(best, train, baseline, params)

    out_dir = Path(config.out_dir or "runs")
    out_dir.mkdir(parents=True, exist_ok=True)
    model_path = out_dir / "model.json"
    manifest_path = out_dir / "manifest.json"
    model_path.write_text(serialize_model(best), encoding="utf-8")
    manifest = build_manifest(
        config, params, config.corpus_paths[0], corpus, digest, train, test, best_report, history
    )
    manifest_path.write_text(manifest_to_json(manifest), encoding="utf-8")

    click.echo(
        f"best total {best_report.total:.3f} | compression "
        f"{best_report.compression_rate:.2f}% | {best_report.num_rules} rules"
    )
    click.echo(f"model: {model_path}")
    click.echo(f"manifest: {manifest_path}")


@main.command(name="compress")
@click.option("--model", "model_path", type=str, required=True)
@click.option("--corpus", "corpus_path", type=str, required=True)
@click.option("--out", type=str, default=None, help="Output file; stdout when omitted.")
@_guarded
def compress_cmd(model_path, corpus_path, out):
    """Apply a model to a tagged corpus and emit the compressed corpus."""
    compressor = _load_model(model_path)
    corpus, _ = _read_corpus(corpus_path)
    compressed = CorpusMatcher(corpus).compress_corpus(compressor)
    text = write_tagged_corpus(compressed)
    if out:
        Path(out).parent.mkdir(parents=True, exist_ok=True)
        Path(out).write_text(text, encoding="utf-8")
        click.echo(f"wrote {out}")
    else:
        click.echo(text, nl=False)


@main.command(name="evaluate")
@click.option("--model", "model_path", type=str, required=True)
@click.option("--eval-split", type=click.Choice(["test", "train", "all"]), default=None)
@_experiment_options
@_guarded
def evaluate_cmd(model_path, eval_split, config_path, corpus_paths, **flags):
    """Original vs compressed baseline accuracy, one row per corpus."""
    config = _assemble_config(config_path, corpus_paths, **flags)
    if eval_split:
        config.eval_split = eval_split
    if not config.corpus_paths:
        raise ConfigError("evaluate needs at least one --corpus")

    compressor = _load_model(model_path)
    lexicon, negations = load_analyzer_inputs(config)
    analyzer = BaselineAnalyzer(lexicon, negations)
    seed = config.param_values.get("seed", 0)

    corpora = []
    for path in config.corpus_paths:
        corpus, _ = _read_corpus(path)
        corpora.append(split_for_eval(corpus, config, seed))
    rows = evaluate_model(compressor, corpora, analyzer)

    if config.report_format == "csv":
        click.echo(rows_to_csv(rows), nl=False)
    else:
        click.echo(rows_to_table(rows), nl=False)
    if config.out_dir:
        out_dir = Path(config.out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "rows.csv").write_text(rows_to_csv(rows), encoding="utf-8")
        (out_dir / "table.txt").write_text(rows_to_table(rows), encoding="utf-8")


@main.command(name="report")
@click.option("--rows", "rows_path", type=str, required=True, help="CSV written by evaluate.")
@click.option("--format", "report_format", type=click.Choice(["table", "csv"]), default="table")
@_guarded
def report_cmd(rows_path, report_format):
    """Re-render stored evaluation rows."""
    try:
        text = Path(rows_path).read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigError(f"rows file does not exist: {rows_path}") from None
    try:
        rows = rows_from_csv(text)
    except ValueError as e:
        raise ParseError(str(e)) from e
    click.echo(rows_to_csv(rows) if report_format == "csv" else rows_to_table(rows), nl=False)


if __name__ == "__main__":
    main()
