"""Experiment plumbing shared by the CLI commands.

Config files are flat `key = value` text; any CLI flag overrides its key.
Run manifests are deterministic JSON: same config + seed means byte-identical
output, so no timestamps or host details ever go in.
"""

from __future__ import annotations

import dataclasses
import hashlib
import json
from dataclasses import dataclass
from pathlib import Path

from .compressor import Compressor
from .corpus import Corpus, corpus_word_count, parse_tagged_corpus, split_train_test
from .evolution import EvolutionParams, FitnessReport, GenerationStats
from .reporting import AccuracyDelta, average_row
from .sentiment import (
    DEFAULT_NEGATIONS,
    BaselineAnalyzer,
    Lexicon,
    NegationList,
    accuracy,
    load_lexicon,
    load_negations,
)


class ConfigError(Exception):
    pass


_PARAM_FIELDS = {f.name: f.type for f in dataclasses.fields(EvolutionParams)}

_INT_KEYS = {
    "rules_min",
    "rules_max",
    "population_size",
    "generations",
    "tags_min",
    "tags_max",
    "tournament_size",
    "elitism",
    "max_repair_attempts",
    "seed",
}
_FLOAT_KEYS = {
    "lcb",
    "ucb",
    "crossover_rate",
    "mutation_rate",
    "length_weight",
    "rules_weight",
    "train_fraction",
}
_STR_KEYS = {"lexicon", "negations", "out", "format", "eval_split"}
_EVAL_SPLITS = ("test", "train", "all")


@dataclass
class ExperimentConfig:
    corpus_paths: tuple[str, ...] = ()
    lexicon_path: str | None = None
    negations_path: str | None = None
    out_dir: str | None = None
    report_format: str = "table"
    train_fraction: float = 0.7
    eval_split: str = "test"
    param_values: dict = dataclasses.field(default_factory=dict)

    def params(self) -> EvolutionParams:
        missing = [k for k in ("lcb", "ucb", "rules_min", "rules_max") if k not in self.param_values]
        if missing:
            raise ConfigError(f"missing required parameter(s): {', '.join(missing)}")
        try:
            return EvolutionParams(**self.param_values)
        except ValueError as e:
            raise ConfigError(str(e)) from e


def _parse_value(key: str, value: str):
    try:
        if key in _INT_KEYS:
            return int(value)
        if key in _FLOAT_KEYS:
            return float(value)
    except ValueError:
        raise ConfigError(f"key {key!r} expects a number, got {value!r}") from None
    return value


def load_config(path: str) -> ExperimentConfig:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e
    config = ExperimentConfig()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line!r}")
        key, _, value = line.partition("=")
        key, value = key.strip(), value.strip()
        apply_setting(config, key, value)
    return config


def apply_setting(config: ExperimentConfig, key: str, value: str) -> None:
    if key == "corpus":
        paths = tuple(p.strip() for p in value.split(",") if p.strip())
        config.corpus_paths = config.corpus_paths + paths
    elif key == "lexicon":
        config.lexicon_path = value
    elif key == "negations":
        config.negations_path = value
    elif key == "out":
        config.out_dir = value
    elif key == "format":
        if value not in ("table", "csv"):
            raise ConfigError(f"format must be 'table' or 'csv', got {value!r}")
        config.report_format = value
    elif key == "train_fraction":
        config.train_fraction = _parse_value(key, value)
    elif key == "eval_split":
        if value not in _EVAL_SPLITS:
            raise ConfigError(f"eval_split must be one of {_EVAL_SPLITS}, got {value!r}")
        config.eval_split = value
    elif key in _PARAM_FIELDS:
        config.param_values[key] = _parse_value(key, value)
    else:
        raise ConfigError(f"unknown config key {key!r}")


def read_corpus_file(path: str) -> tuple[Corpus, str]:
    """Returns the parsed corpus (named after the file stem) and its digest."""
    text = Path(path).read_text(encoding="utf-8")
    corpus = parse_tagged_corpus(text, name=Path(path).stem)
    return corpus, hashlib.sha256(text.encode("utf-8")).hexdigest()


def load_analyzer_inputs(config: ExperimentConfig) -> tuple[Lexicon, NegationList]:
    if not config.lexicon_path:
        raise ConfigError("missing lexicon path (config key 'lexicon' or --lexicon)")
    try:
        lexicon = load_lexicon(Path(config.lexicon_path).read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigError(f"cannot read lexicon {config.lexicon_path}: {e}") from e
    if config.negations_path:
        try:
            negations = load_negations(Path(config.negations_path).read_text(encoding="utf-8"))
        except OSError as e:
            raise ConfigError(f"cannot read negation list {config.negations_path}: {e}") from e
    else:
        negations = NegationList(DEFAULT_NEGATIONS)
    return lexicon, negations


def build_manifest(
    config: ExperimentConfig,
    params: EvolutionParams,
    corpus_path: str,
    corpus: Corpus,
    digest: str,
    train: Corpus,
    test: Corpus,
    best_report: FitnessReport,
    history: list[GenerationStats],
) -> dict:
    return {
        "command": "evolve",
        "params": dataclasses.asdict(params),
        "train_fraction": config.train_fraction,
        "corpus": {
            "path": corpus_path,
            "name": corpus.name,
            "sha256": digest,
            "instances": len(corpus),
            "words": corpus_word_count(corpus),
        },
        "split": {"train_instances": len(train), "test_instances": len(test)},
        "lexicon": config.lexicon_path,
        "negations": config.negations_path or "builtin-defaults",
        "best": dataclasses.asdict(best_report),
        "achieved_compression_rate": best_report.compression_rate,
        "history": [dataclasses.asdict(entry) for entry in history],
    }


def manifest_to_json(manifest: dict) -> str:
    return json.dumps(manifest, indent=2, sort_keys=True) + "\n"


def split_for_eval(corpus: Corpus, config: ExperimentConfig, seed: int) -> Corpus:
    if config.eval_split == "all":
        return corpus
    train, test = split_train_test(corpus, config.train_fraction, seed)
    return train if config.eval_split == "train" else test


def evaluate_model(
    compressor: Compressor,
    corpora: list[Corpus],
    analyzer: BaselineAnalyzer,
) -> list[AccuracyDelta]:
    """One row per corpus plus the Average row."""
    rows = [
        AccuracyDelta.measure(
            dataset=corpus.name,
            analyzer=analyzer.name,
            original=accuracy(corpus, analyzer),
            compressed=accuracy(corpus, analyzer, compressor),
        )
        for corpus in corpora
    ]
    rows.append(average_row(rows))
    return rows
