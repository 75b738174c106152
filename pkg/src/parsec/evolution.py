"""Evolutionary search for compressors under compression-rate bounds.

Individuals are rule lists. Every individual in every generation must keep
its corpus-level compression rate inside [lcb, ucb] and its rule count inside
[rules_min, rules_max]; candidates produced by initialization, crossover and
mutation are pushed back inside those bounds by a bounded stochastic repair
loop, falling back to the parent (or the unmutated input) when repair fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .compressor import Compressor, Rule
from .corpus import Corpus, Label
from .matching import CorpusMatcher
from .sentiment import (
    Lexicon,
    NegationList,
    classify,
    ensure_disjoint,
    score_instance,
)
from .tags import INTERIOR_PATTERN_TAGS, WORD_TAGS

# repair phase budget after rejection sampling gives up, in multiples of
# max_repair_attempts
REPAIR_CAP_FACTOR = 10


class InitializationFailure(Exception):
    pass


@dataclass(frozen=True)
class EvolutionParams:
    lcb: float
    ucb: float
    rules_min: int
    rules_max: int
    population_size: int = 250
    generations: int = 100
    crossover_rate: float = 0.60
    mutation_rate: float = 0.40
    tags_min: int = 2
    tags_max: int = 5
    tournament_size: int = 4
    elitism: int = 1
    length_weight: float = 0.5
    rules_weight: float = 0.1
    max_repair_attempts: int = 50
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.lcb < self.ucb <= 100:
            raise ValueError(f"need 0 < lcb < ucb <= 100, got lcb={self.lcb} ucb={self.ucb}")
        if not 1 <= self.rules_min <= self.rules_max:
            raise ValueError(
                f"need 1 <= rules_min <= rules_max, got {self.rules_min}..{self.rules_max}"
            )
        if not 1 <= self.tags_min <= self.tags_max:
            raise ValueError(
                f"need 1 <= tags_min <= tags_max, got {self.tags_min}..{self.tags_max}"
            )
        for name in ("crossover_rate", "mutation_rate"):
            rate = getattr(self, name)
            if not 0 <= rate <= 1:
                raise ValueError(f"{name} must be in [0,1], got {rate}")
        if self.population_size < 1:
            raise ValueError("population_size must be positive")
        if self.generations < 0:
            raise ValueError("generations must be non-negative")
        if not 1 <= self.tournament_size:
            raise ValueError("tournament_size must be positive")
        if not 0 <= self.elitism <= self.population_size:
            raise ValueError("elitism must be in [0, population_size]")


@dataclass(frozen=True)
class FitnessReport:
    raw_fitness: int
    average_change: float
    num_rules: int
    compression_rate: float
    total: float

    @classmethod
    def from_parts(
        cls,
        raw_fitness: int,
        average_change: float,
        num_rules: int,
        compression_rate: float,
        length_weight: float = 0.5,
        rules_weight: float = 0.1,
    ) -> "FitnessReport":
        total = raw_fitness + length_weight * average_change - rules_weight * num_rules
        return cls(raw_fitness, average_change, num_rules, compression_rate, total)


@dataclass(frozen=True)
class PrecomputedBaseline:
    """Per-instance facts the fitness function needs, frozen once per corpus.

    Carries the lexicon and negation list too: fitness has to re-classify the
    compressed text of every instance, which needs the dictionary itself, not
    just the precomputed labels.
    """

    original_labels: tuple[Label, ...]
    gold_labels: tuple[Label, ...]
    original_lengths: tuple[int, ...]
    lexicon: Lexicon
    negations: NegationList


def precompute_baseline(
    corpus: Corpus, lexicon: Lexicon, negations: NegationList
) -> PrecomputedBaseline:
    lexicon = ensure_disjoint(lexicon, negations)
    original = tuple(classify(score_instance(i, lexicon, negations)) for i in corpus.instances)
    gold = tuple(i.label for i in corpus.instances)
    lengths = tuple(i.word_count for i in corpus.instances)
    return PrecomputedBaseline(original, gold, lengths, lexicon, negations)


_LABEL_SIGN = {Label.POSITIVE: 1, Label.NEGATIVE: -1, Label.NEUTRAL: 0}


class FitnessEvaluator:
    """Evaluates many compressors against one (corpus, baseline) pair.

    The corpus is encoded once; per evaluation only the surviving-position
    pass and a vectorized rescoring run.
    """

    def __init__(self, corpus: Corpus, baseline: PrecomputedBaseline, matcher=None):
        self.matcher = matcher if matcher is not None else CorpusMatcher(corpus)
        self.baseline = baseline

        lex = baseline.lexicon.entries
        neg = baseline.negations.words
        lowered = [w.lower() if w is not None else None for w in self.matcher.words]
        self._values = np.array([lex.get(w, 0.0) if w else 0.0 for w in lowered])
        self._is_lex = np.array([w in lex if w else False for w in lowered], dtype=bool)
        self._is_neg = np.array([w in neg if w else False for w in lowered], dtype=bool)
        self._orig_sign = np.array([_LABEL_SIGN[l] for l in baseline.original_labels], np.int8)
        self._gold_sign = np.array([_LABEL_SIGN[l] for l in baseline.gold_labels], np.int8)
        self._orig_lengths = np.array(baseline.original_lengths, dtype=np.int64)

    def compression_rate(self, compressor: Compressor) -> float:
        return self.matcher.compression_rate(compressor)

    def evaluate(self, compressor: Compressor, params: EvolutionParams) -> FitnessReport:
        m = self.matcher
        positions = m.surviving_positions(compressor)
        comp_lengths = m.surviving_token_counts(positions)
        scores = self._instance_scores(positions)

        comp_sign = np.sign(scores).astype(np.int8)
        changed = comp_sign != self._orig_sign
        raw = int(np.sum(np.where(changed, np.where(comp_sign == self._gold_sign, 1, -1), 0)))

        deleted = self._orig_lengths - comp_lengths
        average_change = float(deleted.sum()) / m.n_instances
        rate = 100.0 * float(deleted.sum()) / m.token_total
        return FitnessReport.from_parts(
            raw_fitness=raw,
            average_change=average_change,
            num_rules=len(compressor.rules),
            compression_rate=rate,
            length_weight=params.length_weight,
            rules_weight=params.rules_weight,
        )

    def _instance_scores(self, positions: np.ndarray) -> np.ndarray:
        """Baseline scores of every compressed instance in one pass.

        The negation flag before a token is up iff the run of consecutive
        negation words immediately before it has odd length; sentence breaks
        survive compression and are plain non-words, so they reset the run
        exactly like the reference scorer's per-sentence restart.
        """
        is_neg = self._is_neg[positions]
        is_lex = self._is_lex[positions]
        values = self._values[positions]
        inst = self.matcher.instance_ids[positions]

        n = positions.size
        idx = np.arange(n)
        last_plain = np.maximum.accumulate(np.where(~is_neg, idx, -1))
        run = idx - last_plain
        flag = np.zeros(n, dtype=bool)
        if n > 1:
            flag[1:] = (run[:-1] % 2) == 1

        contrib = np.where(flag, -values, values)
        return np.bincount(
            inst[is_lex], weights=contrib[is_lex], minlength=self.matcher.n_instances
        )


def fitness(
    compressor: Compressor,
    corpus: Corpus,
    baseline: PrecomputedBaseline,
    params: EvolutionParams,
    evaluator: FitnessEvaluator | None = None,
) -> FitnessReport:
    """Reward predictions that compression fixed, punish ones it broke, pay
    for deleted words, charge for rule count."""
    if evaluator is None:
        evaluator = FitnessEvaluator(corpus, baseline)
    return evaluator.evaluate(compressor, params)


# ---------------------------------------------------------------------------
# construction


def create_pos_tags(tags_min: int, tags_max: int, rng: np.random.Generator):
    """Random pattern: uniform length, word tags at the edges, wildcard
    allowed (1-in-37) in the interior, punctuation never."""
    length = int(rng.integers(tags_min, tags_max + 1))
    tags = []
    for i in range(length):
        if i == 0 or i == length - 1:
            tags.append(WORD_TAGS[rng.integers(len(WORD_TAGS))])
        else:
            tags.append(INTERIOR_PATTERN_TAGS[rng.integers(len(INTERIOR_PATTERN_TAGS))])
    return tuple(tags)


def create_decisions(n_tags: int, rng: np.random.Generator) -> tuple[int, ...]:
    """Each index kept with probability 0.5; an empty draw is repaired to one
    uniformly random index so no rule is a silent no-op."""
    picks = [i for i in range(n_tags) if rng.random() < 0.5]
    if not picks:
        picks = [int(rng.integers(n_tags))]
    return tuple(picks)


def create_rule(params: EvolutionParams, rng: np.random.Generator) -> Rule:
    tags = create_pos_tags(params.tags_min, params.tags_max, rng)
    return Rule(tags, create_decisions(len(tags), rng))


def create_compressor(params: EvolutionParams, rng: np.random.Generator) -> Compressor:
    """One rule per slot at probability 0.5 over rules_max slots, then padded
    up to at least one rule and the rules_min floor."""
    rules = [create_rule(params, rng) for _ in range(params.rules_max) if rng.random() < 0.5]
    if not rules:
        rules.append(create_rule(params, rng))
    while len(rules) < params.rules_min:
        rules.append(create_rule(params, rng))
    return Compressor(tuple(rules))


# ---------------------------------------------------------------------------
# bound repair


def _draw_matching_rule(params: EvolutionParams, matcher: CorpusMatcher, rng) -> Rule:
    """Fresh rule whose pattern is read off an actual corpus window.

    A uniform random tag sequence almost never occurs in real text, so a
    repair move that inserts one is a null move and repair degenerates into
    a random walk that rarely reaches the rate window. Proposing patterns
    the corpus contains keeps every strengthening move productive.
    """
    length = int(rng.integers(params.tags_min, params.tags_max + 1))
    pattern = matcher.sample_pattern(length, rng)
    if pattern is None:
        return create_rule(params, rng)
    return Rule(pattern, create_decisions(length, rng))


def _strengthen(
    compressor: Compressor, matcher: CorpusMatcher, params: EvolutionParams, rng
) -> Compressor:
    """One structural move expected to delete more."""
    rules = list(compressor.rules)
    moves = []
    if len(rules) < params.rules_max:
        moves.append("add")
    widenable = [i for i, r in enumerate(rules) if len(r.decisions) < len(r.tags)]
    if widenable:
        moves.append("widen")
    if not moves:
        moves = ["replace"]
    move = moves[int(rng.integers(len(moves)))]
    if move == "add":
        rules.insert(int(rng.integers(len(rules) + 1)), _draw_matching_rule(params, matcher, rng))
    elif move == "widen":
        i = widenable[int(rng.integers(len(widenable)))]
        r = rules[i]
        missing = [d for d in range(len(r.tags)) if d not in r.decisions]
        rules[i] = Rule(r.tags, r.decisions + (missing[int(rng.integers(len(missing)))],))
    else:
        rules[int(rng.integers(len(rules)))] = _draw_matching_rule(params, matcher, rng)
    return Compressor(tuple(rules))


def _weaken(
    compressor: Compressor, matcher: CorpusMatcher, params: EvolutionParams, rng
) -> Compressor:
    """One structural move expected to delete less.

    Preferring to drop a single decision index over dropping a whole rule
    keeps the steps small near the window, where removing a productive rule
    tends to overshoot below the lower bound.
    """
    rules = list(compressor.rules)
    moves = []
    if len(rules) > max(params.rules_min, 1):
        moves.append("remove")
    narrowable = [i for i, r in enumerate(rules) if len(r.decisions) > 1]
    if narrowable:
        moves.append("narrow")
        moves.append("narrow")
    if not moves:
        moves = ["replace"]
    move = moves[int(rng.integers(len(moves)))]
    if move == "remove":
        rules.pop(int(rng.integers(len(rules))))
    elif move == "narrow":
        i = narrowable[int(rng.integers(len(narrowable)))]
        r = rules[i]
        kept = list(r.decisions)
        kept.pop(int(rng.integers(len(kept))))
        rules[i] = Rule(r.tags, tuple(kept))
    else:
        rules[int(rng.integers(len(rules)))] = create_rule(params, rng)
    return Compressor(tuple(rules))


def _rate_repair(
    compressor: Compressor,
    matcher: CorpusMatcher,
    params: EvolutionParams,
    rng,
    max_moves: int,
) -> Compressor | None:
    """Walk the compressor into the [lcb, ucb] window; None when the budget
    runs out first."""
    current = compressor
    for _ in range(max_moves):
        rate = matcher.compression_rate(current)
        if params.lcb <= rate <= params.ucb:
            return current
        if rate < params.lcb:
            current = _strengthen(current, matcher, params, rng)
        else:
            current = _weaken(current, matcher, params, rng)
    rate = matcher.compression_rate(current)
    return current if params.lcb <= rate <= params.ucb else None


def _clamp_rule_count(rules: list[Rule], params: EvolutionParams, rng) -> Compressor:
    rules = list(rules)
    while len(rules) > params.rules_max:
        rules.pop(int(rng.integers(len(rules))))
    if not rules:
        rules.append(create_rule(params, rng))
    while len(rules) < params.rules_min:
        rules.insert(int(rng.integers(len(rules) + 1)), create_rule(params, rng))
    return Compressor(tuple(rules))


# ---------------------------------------------------------------------------
# operators


def init_population(
    params: EvolutionParams,
    corpus: Corpus,
    rng: np.random.Generator,
    matcher: CorpusMatcher | None = None,
) -> list[Compressor]:
    """Rejection-sample fresh compressors into the rate window, repairing the
    last candidate when max_repair_attempts fresh draws all miss."""
    if matcher is None:
        matcher = CorpusMatcher(corpus)
    # one pre-drawn stream per individual, so evaluation order cannot matter
    seeds = rng.integers(0, 2**62, size=params.population_size)
    population = []
    for i in range(params.population_size):
        stream = np.random.default_rng(int(seeds[i]))
        population.append(_init_individual(params, matcher, stream))
    return population


def _init_individual(params: EvolutionParams, matcher: CorpusMatcher, rng) -> Compressor:
    candidate = None
    for _ in range(params.max_repair_attempts):
        candidate = create_compressor(params, rng)
        rate = matcher.compression_rate(candidate)
        if params.lcb <= rate <= params.ucb:
            return candidate
    repaired = _rate_repair(
        candidate, matcher, params, rng, REPAIR_CAP_FACTOR * params.max_repair_attempts
    )
    if repaired is None:
        raise InitializationFailure(
            f"no compressor with {params.rules_min}..{params.rules_max} rules reached "
            f"compression in [{params.lcb}, {params.ucb}] after "
            f"{params.max_repair_attempts} draws and "
            f"{REPAIR_CAP_FACTOR * params.max_repair_attempts} repair moves"
        )
    return repaired


def crossover(
    parent_a: Compressor,
    parent_b: Compressor,
    rng: np.random.Generator,
    params: EvolutionParams,
    matcher: CorpusMatcher,
) -> tuple[Compressor, Compressor]:
    """Single-point crossover on the rule lists. A child that cannot be
    repaired into bounds is replaced by its own parent."""
    cut_a = int(rng.integers(0, len(parent_a.rules) + 1))
    cut_b = int(rng.integers(0, len(parent_b.rules) + 1))
    child_a = _finish_child(parent_a.rules[:cut_a] + parent_b.rules[cut_b:], parent_a, params, rng, matcher)
    child_b = _finish_child(parent_b.rules[:cut_b] + parent_a.rules[cut_a:], parent_b, params, rng, matcher)
    return child_a, child_b


def _finish_child(rules, parent, params, rng, matcher) -> Compressor:
    candidate = _clamp_rule_count(list(rules), params, rng)
    repaired = _rate_repair(candidate, matcher, params, rng, params.max_repair_attempts)
    return repaired if repaired is not None else parent


def mutate(
    compressor: Compressor,
    rng: np.random.Generator,
    params: EvolutionParams,
    matcher: CorpusMatcher,
) -> Compressor:
    """One of: add a rule, remove a rule, replace one pattern tag, regenerate
    one rule's decisions. Returns the input unchanged when repair fails."""
    rules = list(compressor.rules)
    ops = ["replace_tag", "new_decisions"]
    if len(rules) < params.rules_max:
        ops.append("add")
    if len(rules) > max(params.rules_min, 1):
        ops.append("remove")
    op = ops[int(rng.integers(len(ops)))]

    if op == "add":
        rules.insert(int(rng.integers(len(rules) + 1)), create_rule(params, rng))
    elif op == "remove":
        rules.pop(int(rng.integers(len(rules))))
    elif op == "replace_tag":
        i = int(rng.integers(len(rules)))
        r = rules[i]
        j = int(rng.integers(len(r.tags)))
        pool = WORD_TAGS if j in (0, len(r.tags) - 1) else INTERIOR_PATTERN_TAGS
        tags = list(r.tags)
        tags[j] = pool[int(rng.integers(len(pool)))]
        rules[i] = Rule(tuple(tags), r.decisions)
    else:
        i = int(rng.integers(len(rules)))
        r = rules[i]
        rules[i] = Rule(r.tags, create_decisions(len(r.tags), rng))

    repaired = _rate_repair(
        Compressor(tuple(rules)), matcher, params, rng, params.max_repair_attempts
    )
    return repaired if repaired is not None else compressor


def select(
    population: Sequence[Compressor],
    fitnesses: Sequence[FitnessReport],
    rng: np.random.Generator,
    params: EvolutionParams,
) -> Compressor:
    """Tournament over distinct entrants; ties broken uniformly."""
    k = min(params.tournament_size, len(population))
    entrants = rng.choice(len(population), size=k, replace=False)
    best = max(fitnesses[i].total for i in entrants)
    winners = [i for i in entrants if fitnesses[i].total == best]
    return population[winners[int(rng.integers(len(winners)))]]


# ---------------------------------------------------------------------------
# the generational loop


@dataclass(frozen=True)
class GenerationStats:
    generation: int
    best: FitnessReport
    mean_raw_fitness: float
    mean_average_change: float
    mean_num_rules: float
    mean_compression_rate: float
    mean_total: float


def _stats(generation: int, reports: Sequence[FitnessReport]) -> GenerationStats:
    n = len(reports)
    best = max(reports, key=lambda r: r.total)
    return GenerationStats(
        generation=generation,
        best=best,
        mean_raw_fitness=sum(r.raw_fitness for r in reports) / n,
        mean_average_change=sum(r.average_change for r in reports) / n,
        mean_num_rules=sum(r.num_rules for r in reports) / n,
        mean_compression_rate=sum(r.compression_rate for r in reports) / n,
        mean_total=sum(r.total for r in reports) / n,
    )


def evolve(
    params: EvolutionParams,
    train_corpus: Corpus,
    baseline: PrecomputedBaseline,
    on_generation: Callable[[int, list[Compressor], list[FitnessReport]], None] | None = None,
) -> tuple[Compressor, list[GenerationStats]]:
    """Run the generational loop; returns the best individual ever seen and
    one stats entry per generation (entry 0 is the initial population).

    Fully determined by (params, train_corpus, baseline).
    """
    matcher = CorpusMatcher(train_corpus)
    evaluator = FitnessEvaluator(train_corpus, baseline, matcher=matcher)

    root = np.random.SeedSequence(params.seed)
    init_seq, loop_seq = root.spawn(2)
    gen_seqs = loop_seq.spawn(params.generations)

    population = init_population(params, train_corpus, np.random.default_rng(init_seq), matcher)
    reports = [evaluator.evaluate(c, params) for c in population]
    history = [_stats(0, reports)]
    if on_generation is not None:
        on_generation(0, population, reports)

    best_idx = max(range(len(reports)), key=lambda i: reports[i].total)
    best_ever = population[best_idx]
    best_report = reports[best_idx]

    for g in range(1, params.generations + 1):
        rng = np.random.default_rng(gen_seqs[g - 1])

        elite_order = sorted(range(len(population)), key=lambda i: (-reports[i].total, i))
        next_population = [population[i] for i in elite_order[: params.elitism]]

        while len(next_population) < params.population_size:
            if rng.random() < params.crossover_rate:
                pa = select(population, reports, rng, params)
                pb = select(population, reports, rng, params)
                children = list(crossover(pa, pb, rng, params, matcher))
            else:
                children = [select(population, reports, rng, params)]
            for child in children:
                if rng.random() < params.mutation_rate:
                    child = mutate(child, rng, params, matcher)
                next_population.append(child)

        population = next_population[: params.population_size]
        reports = [evaluator.evaluate(c, params) for c in population]
        history.append(_stats(g, reports))
        if on_generation is not None:
            on_generation(g, population, reports)

        gen_best = max(range(len(reports)), key=lambda i: reports[i].total)
        if reports[gen_best].total > best_report.total:
            best_ever = population[gen_best]
            best_report = reports[gen_best]

    return best_ever, history
