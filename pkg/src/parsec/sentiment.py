"""Dictionary sentiment baseline with a polarity-swapping negation flag.

Scoring walks a sentence once. A sentiment word adds its value, negated when
the flag is up; a negation word toggles the flag; any other word drops it.
The flag starts down and resets at every sentence boundary.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from .corpus import Corpus, Label, LabeledInstance

log = logging.getLogger(__name__)

DEFAULT_NEGATIONS = frozenset({"not", "no", "never", "cannot", "n't", "without"})


class LexiconFormatError(Exception):
    pass


@dataclass(frozen=True)
class Lexicon:
    """Word -> signed sentiment value, keys lowercased, no zero values."""

    entries: dict[str, float]

    def __post_init__(self):
        if not self.entries:
            raise ValueError("lexicon is empty")
        for word, value in self.entries.items():
            if word != word.lower():
                raise ValueError(f"lexicon key {word!r} is not lowercased")
            if value == 0:
                raise ValueError(f"lexicon entry {word!r} has zero value")

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class NegationList:
    words: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "words", frozenset(w.lower() for w in self.words))

    def __contains__(self, word: str) -> bool:
        return word in self.words


def load_lexicon(text: str) -> Lexicon:
    """Parse AFINN-style `word<TAB>value` lines; `#` starts a comment.

    Zero-valued entries are dropped with a warning, they can never move a score.
    """
    entries: dict[str, float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2:
            raise LexiconFormatError(f"line {lineno}: expected 'word<TAB>value', got {line!r}")
        word, value_text = parts[0].strip().lower(), parts[1].strip()
        try:
            value = float(value_text)
        except ValueError:
            raise LexiconFormatError(f"line {lineno}: non-numeric value {value_text!r}") from None
        if value == 0:
            log.warning("lexicon line %d: dropping zero-valued entry %r", lineno, word)
            continue
        entries[word] = value
    if not entries:
        raise LexiconFormatError("lexicon contains no usable entries")
    return Lexicon(entries)


def load_negations(text: str) -> NegationList:
    words = set()
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            words.add(line.lower())
    return NegationList(frozenset(words))


def ensure_disjoint(lexicon: Lexicon, negations: NegationList) -> Lexicon:
    """A word cannot be both sentiment-bearing and a negation; negation wins."""
    overlap = set(lexicon.entries) & negations.words
    if not overlap:
        return lexicon
    for word in sorted(overlap):
        log.warning("dropping lexicon entry %r, it is also a negation word", word)
    return Lexicon({w: v for w, v in lexicon.entries.items() if w not in overlap})


def score_sentence(words, lexicon: Lexicon, negations: NegationList) -> float:
    score = 0.0
    negated = False
    for raw in words:
        word = raw.lower()
        value = lexicon.entries.get(word)
        if value is not None:
            score += -value if negated else value
        negated = (not negated) if word in negations else False
    return score


def score_instance(instance: LabeledInstance, lexicon: Lexicon, negations: NegationList) -> float:
    return sum(score_sentence(s.words, lexicon, negations) for s in instance.sentences)


def classify(score: float) -> Label:
    if score > 0:
        return Label.POSITIVE
    if score < 0:
        return Label.NEGATIVE
    return Label.NEUTRAL


class BaselineAnalyzer:
    """The built-in dictionary analyzer. External engines plug in through
    TextAnalyzer instead."""

    def __init__(self, lexicon: Lexicon, negations: NegationList | None = None):
        if negations is None:
            negations = NegationList(DEFAULT_NEGATIONS)
        self.lexicon = ensure_disjoint(lexicon, negations)
        self.negations = negations
        self.name = "baseline"

    def label_instance(self, instance: LabeledInstance) -> Label:
        return classify(score_instance(instance, self.lexicon, self.negations))

    def label_text(self, text: str) -> Label:
        return classify(score_sentence(text.split(), self.lexicon, self.negations))


class TextAnalyzer:
    """Adapter for external engines: wraps any plain-text -> Label callable."""

    def __init__(self, name: str, fn):
        self.name = name
        self._fn = fn

    def label_instance(self, instance: LabeledInstance) -> Label:
        return self._fn(instance.text)


def accuracy(corpus: Corpus, analyzer, compressor=None) -> float:
    """Percentage of instances classified as their gold label.

    A Neutral prediction never equals a gold label. When a compressor is
    given, every instance is compressed before classification.
    """
    if compressor is not None:
        from .matching import CorpusMatcher

        corpus = CorpusMatcher(corpus).compress_corpus(compressor)
    hits = sum(
        1 for instance in corpus.instances if analyzer.label_instance(instance) == instance.label
    )
    return 100.0 * hits / len(corpus.instances)
