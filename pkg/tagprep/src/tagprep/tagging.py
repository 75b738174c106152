"""Taggers and the raw-tag normalization table.

A tagger is any callable taking review text and returning sentences of
(word, raw_tag) pairs. ExternalTagger shells out to a real POS tagger;
FallbackTagger is a dictionary-and-suffix stand-in for machines without one.
"""

from __future__ import annotations

import os
import re
import shlex
import subprocess
import tempfile
from dataclasses import dataclass
from typing import Callable

from parsec import PUNCTUATION_TAGS, WORD_TAGS

Sentence = list[tuple[str, str]]
Tagger = Callable[[str], list[Sentence]]


class TaggerUnavailable(Exception):
    """The external tagger could not be run or violated its output protocol."""


class TagMappingError(Exception):
    """A tagger emitted a tag that has no place in the corpus tag set."""


#: Literal tag strings the corpus format accepts (36 word + 12 punctuation).
VALID_TAGS: frozenset[str] = frozenset(t.value for t in WORD_TAGS) | frozenset(
    t.value for t in PUNCTUATION_TAGS
)

#: Raw tagger outputs folded into the corpus tag set. Treebank-style bracket
#: classes all collapse to plain parentheses; anything not listed here must
#: already be a valid corpus tag.
TAG_ALIASES: dict[str, str] = {
    "-LRB-": "(",
    "-RRB-": ")",
    "-LSB-": "(",
    "-RSB-": ")",
    "-LCB-": "(",
    "-RCB-": ")",
}


def normalize_tag(raw: str, word: str) -> str:
    tag = TAG_ALIASES.get(raw, raw)
    if tag not in VALID_TAGS:
        raise TagMappingError(
            f"cannot map tag {raw!r} (token {word!r}) into the corpus tag set"
        )
    return tag


def _parse_tagger_output(output: str) -> list[Sentence]:
    sentences: list[Sentence] = []
    for line in output.splitlines():
        if not line.strip():
            continue
        sentence: Sentence = []
        for token in line.split():
            word, sep, tag = token.rpartition("_")
            if not sep or not word or not tag:
                raise TaggerUnavailable(f"tagger emitted {token!r}, expected word_TAG")
            sentence.append((word, tag))
        sentences.append(sentence)
    if not sentences:
        raise TaggerUnavailable("tagger produced no output")
    return sentences


@dataclass(frozen=True)
class ExternalTagger:
    """Runs a POS tagger as a subprocess, one invocation per review.

    The command template is split shell-style; every `{input}` inside an
    argument is replaced with the path of a temporary file holding the review
    text. Output must be in the classic form the Stanford command-line tagger
    prints: `word_TAG` tokens separated by spaces, one sentence per line.
    """

    command_template: str
    timeout: float = 120.0

    def __post_init__(self):
        if not shlex.split(self.command_template):
            raise ValueError("tagger command template is empty")
        if "{input}" not in self.command_template:
            raise ValueError("tagger command template must contain {input}")

    def __call__(self, text: str) -> list[Sentence]:
        with tempfile.NamedTemporaryFile(
            "w", suffix=".txt", delete=False, encoding="utf-8"
        ) as handle:
            handle.write(text)
            path = handle.name
        try:
            argv = [
                arg.replace("{input}", path)
                for arg in shlex.split(self.command_template)
            ]
            try:
                proc = subprocess.run(
                    argv, capture_output=True, text=True, timeout=self.timeout
                )
            except FileNotFoundError as exc:
                raise TaggerUnavailable(f"tagger command not found: {argv[0]}") from exc
            except subprocess.TimeoutExpired as exc:
                raise TaggerUnavailable(
                    f"tagger timed out after {self.timeout}s"
                ) from exc
            if proc.returncode != 0:
                detail = proc.stderr.strip().splitlines()
                tail = detail[-1] if detail else "no stderr"
                raise TaggerUnavailable(f"tagger exited {proc.returncode}: {tail}")
            return _parse_tagger_output(proc.stdout)
        finally:
            os.unlink(path)


# --- fallback tagger -------------------------------------------------------

_CLOSED_CLASS = {
    "the": "DT", "a": "DT", "an": "DT", "this": "DT", "that": "DT",
    "these": "DT", "those": "DT", "no": "DT", "every": "DT", "each": "DT",
    "i": "PRP", "you": "PRP", "he": "PRP", "she": "PRP", "it": "PRP",
    "we": "PRP", "they": "PRP", "me": "PRP", "him": "PRP", "her": "PRP",
    "them": "PRP", "us": "PRP",
    "my": "PRP$", "your": "PRP$", "his": "PRP$", "its": "PRP$",
    "our": "PRP$", "their": "PRP$",
    "is": "VBZ", "was": "VBD", "are": "VBP", "were": "VBD", "am": "VBP",
    "be": "VB", "been": "VBN", "being": "VBG",
    "do": "VBP", "does": "VBZ", "did": "VBD", "have": "VBP", "has": "VBZ",
    "had": "VBD",
    "and": "CC", "or": "CC", "but": "CC", "nor": "CC",
    "of": "IN", "in": "IN", "on": "IN", "at": "IN", "with": "IN",
    "for": "IN", "from": "IN", "as": "IN", "by": "IN", "if": "IN",
    "than": "IN", "after": "IN", "before": "IN",
    "to": "TO",
    "not": "RB", "never": "RB", "very": "RB", "too": "RB", "so": "RB",
    "again": "RB", "here": "RB", "there": "EX",
    "can": "MD", "will": "MD", "would": "MD", "could": "MD",
    "should": "MD", "may": "MD", "might": "MD", "must": "MD",
    "what": "WP", "who": "WP", "which": "WDT", "whose": "WP$",
    "when": "WRB", "where": "WRB", "why": "WRB", "how": "WRB",
    "great": "JJ", "good": "JJ", "bad": "JJ", "nice": "JJ", "poor": "JJ",
    "new": "JJ", "old": "JJ",
    "n't": "RB", "'s": "POS", "'ve": "VBP", "'ll": "MD", "'re": "VBP",
    "'m": "VBP", "'d": "MD",
}

_PUNCT_MAP = {
    ".": ".", "!": ".", "?": ".",
    ",": ",",
    ";": ":", ":": ":", "-": ":", "--": ":",
    "(": "(", ")": ")", "[": "(", "]": ")", "{": "(", "}": ")",
    '"': '"', "'": "'", "`": "`", "``": "``", "''": "''",
    "$": "$", "#": "#",
}

_SUFFIX_RULES = (
    ("ly", "RB"),
    ("ing", "VBG"),
    ("ed", "VBD"),
    ("est", "JJS"),
    ("ous", "JJ"),
    ("ful", "JJ"),
    ("ive", "JJ"),
    ("able", "JJ"),
    ("ible", "JJ"),
    ("less", "JJ"),
)

_CONTRACTION_SPLIT = re.compile(r"(?i)(?<=[a-z])(n't|'(?:s|ve|ll|re|m|d))\b")
_TOKEN_RE = re.compile(
    r"n't|'(?:s|ve|ll|re|m|d)\b|[A-Za-z]+(?:-[A-Za-z]+)*|\d+(?:[.,]\d+)*|--|``|''|\S"
)
_SENTENCE_FINAL = frozenset({".", "!", "?"})
_NUMBER_RE = re.compile(r"\d+(?:[.,]\d+)*")


def _split_sentences(text: str) -> list[list[str]]:
    text = _CONTRACTION_SPLIT.sub(r" \1", text)
    sentences: list[list[str]] = []
    current: list[str] = []
    for word in _TOKEN_RE.findall(text):
        current.append(word)
        if word in _SENTENCE_FINAL:
            sentences.append(current)
            current = []
    if current:
        sentences.append(current)
    return sentences


def _guess_tag(word: str) -> str:
    low = word.lower()
    if low in _CLOSED_CLASS:
        return _CLOSED_CLASS[low]
    if word in _PUNCT_MAP:
        return _PUNCT_MAP[word]
    if _NUMBER_RE.fullmatch(word):
        return "CD"
    if not any(ch.isalnum() for ch in word):
        return "SYM"
    for suffix, tag in _SUFFIX_RULES:
        if low.endswith(suffix) and len(low) > len(suffix) + 1:
            return tag
    if low.endswith("s") and not low.endswith("ss") and len(low) > 3:
        return "NNS"
    if word[0].isupper() and low != word:
        return "NNP"
    return "NN"


class FallbackTagger:
    """Dictionary-and-suffix tagger for machines without a real POS tagger.

    Output quality is nowhere near a trained model and must not be used for
    measurements; it exists so the pipeline can run offline in tests and
    demos. Every tag it emits is drawn from the corpus tag set by
    construction.
    """

    def __call__(self, text: str) -> list[Sentence]:
        return [
            [(word, _guess_tag(word)) for word in sentence]
            for sentence in _split_sentences(text)
        ]
