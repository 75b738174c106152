"""Corpus-level rule application on flat integer arrays.

The per-sentence functions in compressor.py define the semantics; this module
exists because the evolution loop evaluates thousands of compressors against
the same corpus and a per-sentence Python scan is far too slow there. The
whole corpus is encoded once as one int array with a synthetic break code
between sentences, and each rule becomes a handful of vectorized window
comparisons. Equivalence with the reference path is property-tested.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import numpy as np

from .corpus import Corpus, LabeledInstance, TaggedSentence
from .tags import PosTag

if TYPE_CHECKING:
    from .compressor import Compressor

_CODE_BY_TAG = {tag: code for code, tag in enumerate(PosTag)}

# enum definition order puts the 36 word tags first, then punctuation, then
# the wildcard; the break code sits one past the whole enum
WORD_TAG_LIMIT = 36
WILD_CODE = _CODE_BY_TAG[PosTag.WILDCARD]
BREAK_CODE = len(PosTag)


class CorpusMatcher:
    """Applies compressors to an immutable corpus, all instances at once.

    A matching window can never contain punctuation or a sentence break:
    pattern slots hold word tags (codes < WORD_TAG_LIMIT) which only equal
    word-tag positions, and the wildcard slot explicitly requires a word tag.
    That reproduces the punctuation-stop and no-cross-sentence semantics of
    the reference matcher for free.
    """

    def __init__(self, corpus: Corpus):
        self.corpus = corpus
        self.n_instances = len(corpus.instances)

        codes: list[int] = []
        inst_ids: list[int] = []
        sent_ids: list[int] = []
        words: list[str | None] = []
        sentence_owner: list[tuple[int, int]] = []  # global sentence -> (instance, slot)

        for i, instance in enumerate(corpus.instances):
            for s, sentence in enumerate(instance.sentences):
                g = len(sentence_owner)
                sentence_owner.append((i, s))
                for word, tag in zip(sentence.words, sentence.tags):
                    codes.append(_CODE_BY_TAG[tag])
                    inst_ids.append(i)
                    sent_ids.append(g)
                    words.append(word)
                # break after every sentence; nothing matches or deletes it
                codes.append(BREAK_CODE)
                inst_ids.append(i)
                sent_ids.append(g)
                words.append(None)

        self.codes = np.array(codes, dtype=np.int16)
        self.instance_ids = np.array(inst_ids, dtype=np.int32)
        self.sentence_ids = np.array(sent_ids, dtype=np.int32)
        self.words = words
        self.token_mask = self.codes != BREAK_CODE
        self.token_total = int(self.token_mask.sum())
        self._sentence_owner = sentence_owner
        self._tokens_per_instance = np.bincount(
            self.instance_ids[self.token_mask], minlength=self.n_instances
        )
        self._window_starts: dict[int, np.ndarray] = {}

    @property
    def tokens_per_instance(self) -> np.ndarray:
        return self._tokens_per_instance

    def surviving_positions(self, compressor: "Compressor") -> np.ndarray:
        """Flat positions (into the original encoding) left after all rules."""
        codes = self.codes
        positions = np.arange(codes.size, dtype=np.int64)
        for rule in compressor.rules:
            pattern = [_CODE_BY_TAG[t] for t in rule.tags]
            n = codes.size
            width = len(pattern)
            if n < width:
                continue
            m = n - width + 1
            ok = np.ones(m, dtype=bool)
            for j, pj in enumerate(pattern):
                col = codes[j : j + m]
                if pj == WILD_CODE:
                    ok &= col < WORD_TAG_LIMIT
                else:
                    ok &= col == pj
            starts = np.flatnonzero(ok)
            if starts.size == 0:
                continue
            deltas = np.array(rule.decisions, dtype=np.int64)
            keep = np.ones(n, dtype=bool)
            keep[(starts[:, None] + deltas).ravel()] = False
            codes = codes[keep]
            positions = positions[keep]
        return positions

    def surviving_token_counts(self, positions: np.ndarray) -> np.ndarray:
        token_positions = positions[self.token_mask[positions]]
        return np.bincount(self.instance_ids[token_positions], minlength=self.n_instances)

    def compression_rate(self, compressor: "Compressor") -> float:
        positions = self.surviving_positions(compressor)
        surviving = int(self.token_mask[positions].sum())
        return 100.0 * (self.token_total - surviving) / self.token_total

    def sample_pattern(self, length: int, rng) -> tuple[PosTag, ...] | None:
        """Tag sequence read off a uniformly chosen matchable window.

        Sampling positions rather than tag combinations weights frequent
        sequences by how often they occur, so the result is a pattern that is
        guaranteed to match the corpus at least once. Returns None when no
        window of the requested length exists.
        """
        starts = self._window_starts.get(length)
        if starts is None:
            is_word = self.codes < WORD_TAG_LIMIT
            ok = is_word[: self.codes.size - length + 1].copy()
            for j in range(1, length):
                ok &= is_word[j : self.codes.size - length + 1 + j]
            starts = np.flatnonzero(ok)
            self._window_starts[length] = starts
        if starts.size == 0:
            return None
        start = int(starts[int(rng.integers(starts.size))])
        tag_list = list(PosTag)
        return tuple(tag_list[c] for c in self.codes[start : start + length])

    def compress_corpus(self, compressor: "Compressor") -> Corpus:
        """Materialize the compressed corpus, keeping empty sentences.

        Structurally identical to applying apply_compressor to every sentence.
        """
        positions = self.surviving_positions(compressor)
        token_positions = positions[self.token_mask[positions]]

        per_sentence: dict[int, tuple[list[str], list[PosTag]]] = {}
        tag_list = list(PosTag)
        for p in token_positions.tolist():
            bucket = per_sentence.setdefault(int(self.sentence_ids[p]), ([], []))
            bucket[0].append(self.words[p])
            bucket[1].append(tag_list[self.codes[p]])

        instances = []
        g = 0
        for instance in self.corpus.instances:
            sentences = []
            for _ in instance.sentences:
                words, tags = per_sentence.get(g, ([], []))
                sentences.append(TaggedSentence(tuple(words), tuple(tags)))
                g += 1
            instances.append(LabeledInstance(tuple(sentences), instance.label))
        return Corpus(tuple(instances), name=self.corpus.name)
