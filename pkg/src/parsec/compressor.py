"""Compressors: ordered rule lists that delete words from tagged sentences.

A rule is a POS-tag pattern plus decision indices. Matching scans a sentence
left to right, advancing one position at a time; a window matches when every
pattern slot equals the sentence tag (or is the wildcard, which accepts any
word-level tag) and the window contains no punctuation. All matches of one
rule are flagged against the same pre-deletion sentence, then removed in a
single sweep; the next rule sees the compressed result.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .corpus import Corpus, TaggedSentence
from .tags import PosTag, is_known_tag, tag_from_string


class ParseError(Exception):
    pass


class InvariantViolation(Exception):
    pass


@dataclass(frozen=True)
class Rule:
    tags: tuple[PosTag, ...]
    decisions: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "tags", tuple(self.tags))
        object.__setattr__(self, "decisions", tuple(sorted(set(self.decisions))))
        if not self.tags:
            raise InvariantViolation("rule pattern is empty")
        if self.tags[0] is PosTag.WILDCARD or self.tags[-1] is PosTag.WILDCARD:
            raise InvariantViolation("pattern may not start or end with the wildcard")
        for t in self.tags:
            if t.is_punctuation:
                raise InvariantViolation(
                    f"pattern contains punctuation tag {t.value!r}, which can never match"
                )
        if not self.decisions:
            raise InvariantViolation("rule has no decisions, it would never delete anything")
        for d in self.decisions:
            if not 0 <= d < len(self.tags):
                raise InvariantViolation(
                    f"decision index {d} outside pattern of length {len(self.tags)}"
                )


@dataclass(frozen=True)
class Compressor:
    rules: tuple[Rule, ...]

    def __post_init__(self):
        object.__setattr__(self, "rules", tuple(self.rules))
        if not self.rules:
            raise InvariantViolation("compressor must hold at least one rule")

    def __len__(self) -> int:
        return len(self.rules)


def match_rule_at(rule: Rule, tags: tuple[PosTag, ...], start: int) -> bool:
    """True iff the rule's pattern matches the window beginning at `start`.

    Any punctuation tag inside the window aborts the match, and the wildcard
    does not cover punctuation.
    """
    if start + len(rule.tags) > len(tags):
        return False
    for j, pattern_tag in enumerate(rule.tags):
        t = tags[start + j]
        if t.is_punctuation:
            return False
        if pattern_tag is not PosTag.WILDCARD and t is not pattern_tag:
            return False
    return True


def apply_rule(rule: Rule, sentence: TaggedSentence) -> TaggedSentence:
    """Flag every match against the original sentence, then delete once."""
    flagged: set[int] = set()
    for start in range(len(sentence)):
        if match_rule_at(rule, sentence.tags, start):
            for d in rule.decisions:
                flagged.add(start + d)
    if not flagged:
        return sentence
    words = tuple(w for i, w in enumerate(sentence.words) if i not in flagged)
    tags = tuple(t for i, t in enumerate(sentence.tags) if i not in flagged)
    return TaggedSentence(words, tags)


def apply_compressor(compressor: Compressor, sentence: TaggedSentence) -> TaggedSentence:
    for rule in compressor.rules:
        sentence = apply_rule(rule, sentence)
    return sentence


def compression_rate(compressor: Compressor, corpus: Corpus) -> float:
    """Percentage of corpus words removed by the compressor."""
    from .matching import CorpusMatcher

    return CorpusMatcher(corpus).compression_rate(compressor)


def serialize_model(compressor: Compressor) -> str:
    doc = {
        "rules": [
            {"tags": [t.value for t in r.tags], "decisions": list(r.decisions)}
            for r in compressor.rules
        ]
    }
    return json.dumps(doc, indent=2) + "\n"


def deserialize_model(text: str) -> Compressor:
    """Parse a model document; malformed JSON or shapes raise ParseError,
    structurally invalid rules raise InvariantViolation."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"model is not valid JSON: {e}") from e
    if not isinstance(doc, dict) or "rules" not in doc:
        raise ParseError("model document must be an object with a 'rules' list")
    raw_rules = doc["rules"]
    if not isinstance(raw_rules, list):
        raise ParseError("'rules' must be a list")
    rules = []
    for i, raw in enumerate(raw_rules):
        if not isinstance(raw, dict) or "tags" not in raw or "decisions" not in raw:
            raise ParseError(f"rule {i} must be an object with 'tags' and 'decisions'")
        tags = []
        for t in raw["tags"]:
            if not isinstance(t, str) or not is_known_tag(t):
                raise ParseError(f"rule {i} has unknown tag {t!r}")
            tags.append(tag_from_string(t))
        decisions = raw["decisions"]
        if not isinstance(decisions, list) or not all(
            isinstance(d, int) and not isinstance(d, bool) for d in decisions
        ):
            raise ParseError(f"rule {i} decisions must be a list of integers")
        rules.append(Rule(tuple(tags), tuple(decisions)))
    return Compressor(tuple(rules))
