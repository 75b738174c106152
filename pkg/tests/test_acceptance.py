"""Acceptance suite: one test per headline guarantee, each printing a
single PASS line with the measured numbers when it holds.

These run the same entry points users touch (library calls and the CLI), at
sizes small enough for a laptop but large enough to be meaningful.
"""

import time

import numpy as np
import pytest
from click.testing import CliRunner

import oracles
from helpers import (
    as_strings,
    random_compressor,
    random_rule,
    random_sentence,
)
from parsec.cli import main
from parsec.compressor import Compressor, Rule, apply_compressor, apply_rule
from parsec.corpus import split_train_test
from parsec.evolution import (
    EvolutionParams,
    FitnessEvaluator,
    FitnessReport,
    evolve,
    precompute_baseline,
)
from parsec.experiment import ExperimentConfig, build_manifest, manifest_to_json
from parsec.matching import CorpusMatcher
from parsec.sentiment import BaselineAnalyzer, Lexicon, NegationList, accuracy, score_sentence
from parsec.tags import PosTag


def ok(line):
    print(f"PASS {line}")


def test_matcher_agrees_with_bruteforce_oracle():
    rng = np.random.default_rng(101)
    start = time.monotonic()
    agreements = 0
    for _ in range(10_000):
        s = random_sentence(rng)  # <=10 tokens, 6 word tags + 2 punctuation tags
        r = random_rule(rng)  # patterns of 2..4 slots
        got = apply_rule(r, s)
        want_words, want_tags = oracles.apply_rule(
            list(s.words), as_strings(s.tags), as_strings(r.tags), list(r.decisions)
        )
        assert list(got.words) == want_words and as_strings(got.tags) == want_tags
        agreements += 1
    elapsed = time.monotonic() - start
    assert agreements == 10_000
    assert elapsed < 5.0
    ok(f"matcher oracle: 10000/10000 agreements in {elapsed:.2f}s (< 5s)")


def test_punctuation_always_survives_compression():
    rng = np.random.default_rng(102)
    sentences = [random_sentence(rng, punct_prob=0.3) for _ in range(100)]
    checked = 0
    for _ in range(1000):
        compressor = random_compressor(rng)
        for s in sentences:
            before = [w for w, t in zip(s.words, s.tags) if t.is_punctuation]
            out = apply_compressor(compressor, s)
            after = [w for w, t in zip(out.words, out.tags) if t.is_punctuation]
            assert before == after
            checked += 1
    assert checked == 100_000
    ok("punctuation conservation: exact over 1000 compressors x 100 sentences")


def test_negation_scoring_matches_reference():
    lex = {"great": 2.0, "good": 1.0, "bad": -2.0, "awful": -3.0, "fine": 1.0}
    neg = {"not", "never", "n't"}
    lexicon = Lexicon(lex)
    negations = NegationList(frozenset(neg))

    for words, want in [(["not", "great"], -2.0), (["not", "not", "great"], 2.0),
                        (["not", "x", "great"], 2.0)]:
        assert score_sentence(words, lexicon, negations) == want

    vocab = list(lex) + list(neg) + ["the", "item", "x", "works"]
    rng = np.random.default_rng(103)
    for _ in range(1000):
        words = [vocab[int(rng.integers(len(vocab)))] for _ in range(int(rng.integers(0, 12)))]
        assert score_sentence(words, lexicon, negations) == oracles.score_sentence(
            words, lex, neg
        )
    ok("negation scoring: 1000 random sequences + 3 pinned cases, exact")


def test_fitness_total_identity(reviews_corpus, lexicon, negations):
    rng = np.random.default_rng(104)
    for _ in range(1000):
        raw = int(rng.integers(-50, 50))
        avg = float(rng.normal() * 20)
        n_rules = int(rng.integers(1, 120))
        report = FitnessReport.from_parts(raw, avg, n_rules, 15.0)
        assert report.total == raw + 0.5 * avg - 0.1 * n_rules

    baseline = precompute_baseline(reviews_corpus, lexicon, negations)
    evaluator = FitnessEvaluator(reviews_corpus, baseline)
    params = EvolutionParams(lcb=10, ucb=13, rules_min=1, rules_max=9)
    inert = Compressor(
        tuple(Rule((PosTag.FW, PosTag.UH), (0,)) for _ in range(3))
    )
    report = evaluator.evaluate(inert, params)
    assert report.raw_fitness == 0 and report.average_change == 0.0
    assert report.total == -0.1 * 3
    ok("fitness identity: total == raw + 0.5*avg_change - 0.1*rules over 1000 reports")


@pytest.mark.parametrize(
    "lcb,ucb,rules_min,rules_max",
    [(10, 13, 5, 50), (20, 23, 20, 90)],
    ids=["window-10-13", "window-20-23"],
)
def test_every_generation_respects_bounds(
    reviews_corpus, lexicon, negations, lcb, ucb, rules_min, rules_max
):
    params = EvolutionParams(
        lcb=lcb, ucb=ucb, rules_min=rules_min, rules_max=rules_max,
        population_size=50, generations=20, seed=17,
    )
    baseline = precompute_baseline(reviews_corpus, lexicon, negations)
    matcher = CorpusMatcher(reviews_corpus)

    checked = 0

    def every_individual_in_bounds(gen, population, reports):
        nonlocal checked
        for c in population:
            rate = matcher.compression_rate(c)
            assert lcb <= rate <= ucb, f"gen {gen}: rate {rate} outside [{lcb},{ucb}]"
            assert rules_min <= len(c) <= rules_max, f"gen {gen}: {len(c)} rules"
            checked += 1

    start = time.monotonic()
    evolve(params, reviews_corpus, baseline, on_generation=every_individual_in_bounds)
    elapsed = time.monotonic() - start
    assert checked == 50 * 21
    assert elapsed < 120.0
    ok(
        f"bounds [{lcb},{ucb}] x rules [{rules_min},{rules_max}]: "
        f"{checked}/{checked} individuals in bounds, {elapsed:.1f}s (< 120s)"
    )


def test_elitism_monotonic_and_reruns_bit_identical(reviews_corpus, lexicon, negations):
    params = EvolutionParams(
        lcb=10, ucb=13, rules_min=5, rules_max=50,
        population_size=12, generations=6, seed=23,
    )
    train, test = split_train_test(reviews_corpus, 0.7, seed=params.seed)
    baseline = precompute_baseline(train, lexicon, negations)

    config = ExperimentConfig(lexicon_path="lexicon.tsv", train_fraction=0.7)
    manifests = []
    for _ in range(2):
        best, history = evolve(params, train, baseline)
        totals = [h.best.total for h in history]
        assert totals == sorted(totals), "best fitness regressed between generations"
        evaluator = FitnessEvaluator(train, baseline)
        manifest = build_manifest(
            config, params, "reviews.tagged", reviews_corpus, "digest",
            train, test, evaluator.evaluate(best, params), history,
        )
        manifests.append(manifest_to_json(manifest).encode("utf-8"))
    assert manifests[0] == manifests[1]
    ok("elitism monotonic over 6 generations; same-seed manifests bit-identical")


def test_compression_window_keeps_accuracy(reviews_corpus, lexicon, negations):
    """A fifth of the corpus can go without hurting the dictionary analyzer.

    The bundled corpus keeps its sentiment words to ~10% of tokens, so a
    compressor that deletes only filler exists; the search should find one
    close enough that held-out accuracy drops by at most 2 points.
    """
    params = EvolutionParams(
        lcb=20, ucb=23, rules_min=20, rules_max=90,
        population_size=50, generations=30, seed=11,
    )
    train, test = split_train_test(reviews_corpus, 0.7, seed=0)
    baseline = precompute_baseline(train, lexicon, negations)

    start = time.monotonic()
    best, _ = evolve(params, train, baseline)
    elapsed = time.monotonic() - start

    achieved = CorpusMatcher(train).compression_rate(best)
    analyzer = BaselineAnalyzer(lexicon, negations)
    original = accuracy(test, analyzer)
    compressed = accuracy(test, analyzer, compressor=best)
    delta = compressed - original

    assert 20.0 <= achieved <= 23.0
    assert delta >= -2.0
    assert elapsed < 300.0
    ok(
        f"efficacy: {achieved:.1f}% compression, held-out accuracy "
        f"{original:.1f} -> {compressed:.1f} (delta {delta:+.1f}pp >= -2.0), "
        f"{elapsed:.1f}s (< 300s)"
    )


def test_evaluation_report_layout(data_dir, tmp_path):
    runner = CliRunner()
    fast = [
        "--lcb", "10", "--ucb", "13", "--rules-min", "5", "--rules-max", "50",
        "--pop", "8", "--gens", "2", "--seed", "3",
    ]
    trained = runner.invoke(main, [
        "evolve",
        "--corpus", str(data_dir / "reviews_200.tagged"),
        "--lexicon", str(data_dir / "lexicon.tsv"),
        "--negations", str(data_dir / "negations.txt"),
        *fast, "--out", str(tmp_path),
    ])
    assert trained.exit_code == 0, trained.output

    result = runner.invoke(main, [
        "evaluate",
        "--model", str(tmp_path / "model.json"),
        "--corpus", str(data_dir / "gadgets_60.tagged"),
        "--corpus", str(data_dir / "books_60.tagged"),
        "--corpus", str(data_dir / "media_60.tagged"),
        "--lexicon", str(data_dir / "lexicon.tsv"),
        "--negations", str(data_dir / "negations.txt"),
        "--eval-split", "all",
    ])
    assert result.exit_code == 0, result.output
    lines = result.output.rstrip("\n").splitlines()
    assert len(lines) == 5, lines
    datasets = [line.split()[0] for line in lines[1:]]
    assert datasets == ["gadgets_60", "books_60", "media_60", "Average"]
    for line in lines[1:]:
        for cell in line.split()[2:]:
            whole, dot, frac = cell.lstrip("+-").partition(".")
            assert dot == "." and len(frac) == 1, f"cell {cell!r} not one-decimal"
    ok("report layout: 3 dataset rows + Average, one-decimal percentages")
