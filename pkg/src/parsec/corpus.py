"""Tagged-corpus data model plus the vertical file format.

One file carries words and tags as aligned columns:

    #label positive
    this<TAB>DT
    is<TAB>VBZ
    ...

A blank line separates sentences; two consecutive blank lines or the next
`#label` header separate instances.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass

from .tags import PosTag, is_known_tag, tag_from_string


class Label(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEUTRAL = "neutral"

    def __str__(self) -> str:
        return self.value


class CorpusFormatError(Exception):
    """Base class for vertical-format violations. Carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class MisalignedLine(CorpusFormatError):
    pass


class UnknownTag(CorpusFormatError):
    def __init__(self, tag: str, line: int | None = None):
        super().__init__(f"unknown tag {tag!r}", line)
        self.tag = tag


class MissingLabel(CorpusFormatError):
    pass


class EmptyCorpus(CorpusFormatError):
    pass


class EmptyInstance(CorpusFormatError):
    pass


class TooFewInstances(Exception):
    pass


@dataclass(frozen=True)
class TaggedSentence:
    words: tuple[str, ...]
    tags: tuple[PosTag, ...]

    def __post_init__(self):
        if len(self.words) != len(self.tags):
            raise ValueError(
                f"misaligned sentence: {len(self.words)} words vs {len(self.tags)} tags"
            )
        if any(t is PosTag.WILDCARD for t in self.tags):
            raise ValueError("wildcard is a pattern element, not a data tag")

    def __len__(self) -> int:
        return len(self.words)

    @property
    def text(self) -> str:
        return " ".join(self.words)


@dataclass(frozen=True)
class LabeledInstance:
    """One review: a sequence of tagged sentences plus its gold label."""

    sentences: tuple[TaggedSentence, ...]
    label: Label

    def __post_init__(self):
        if not self.sentences or self.word_count == 0:
            raise ValueError("instance must contain at least one word")
        if self.label is Label.NEUTRAL:
            raise ValueError("gold labels are positive or negative")

    @property
    def word_count(self) -> int:
        return sum(len(s) for s in self.sentences)

    @property
    def text(self) -> str:
        return " ".join(s.text for s in self.sentences)


@dataclass(frozen=True)
class Corpus:
    instances: tuple[LabeledInstance, ...]
    name: str = "corpus"

    def __post_init__(self):
        if not self.instances:
            raise ValueError("corpus must contain at least one instance")

    def __len__(self) -> int:
        return len(self.instances)


_HEADER_PREFIX = "#label"
_LABELS = {"positive": Label.POSITIVE, "negative": Label.NEGATIVE}


def parse_tagged_corpus(text: str, name: str = "corpus") -> Corpus:
    """Parse the vertical format into a Corpus.

    Raises MisalignedLine, UnknownTag, MissingLabel, EmptyInstance or
    EmptyCorpus, each pointing at the offending line.
    """
    instances: list[LabeledInstance] = []
    label: Label | None = None
    sentences: list[TaggedSentence] = []
    words: list[str] = []
    tags: list[PosTag] = []
    blank_run = 0
    header_line = 0

    def close_sentence():
        nonlocal words, tags
        if words:
            sentences.append(TaggedSentence(tuple(words), tuple(tags)))
            words, tags = [], []

    def close_instance():
        nonlocal label, sentences
        if label is None:
            return
        close_sentence()
        if not sentences:
            raise EmptyInstance("instance has no tokens", header_line)
        instances.append(LabeledInstance(tuple(sentences), label))
        label, sentences = None, []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip()
        if not line:
            blank_run += 1
            close_sentence()
            if blank_run >= 2:
                close_instance()
            continue
        blank_run = 0

        if line.startswith(_HEADER_PREFIX):
            close_instance()
            fields = line.split()
            if len(fields) != 2 or fields[1] not in _LABELS:
                raise MissingLabel(
                    f"malformed header {line!r}, expected '#label positive|negative'", lineno
                )
            label = _LABELS[fields[1]]
            header_line = lineno
            continue

        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise MisalignedLine(f"expected 'word<TAB>TAG', got {line!r}", lineno)
        word, tag_text = parts
        if not is_known_tag(tag_text) or tag_text == PosTag.WILDCARD.value:
            raise UnknownTag(tag_text, lineno)
        if label is None:
            raise MissingLabel("token line before any #label header", lineno)
        words.append(word)
        tags.append(tag_from_string(tag_text))

    close_instance()
    if not instances:
        raise EmptyCorpus("no instances found")
    return Corpus(tuple(instances), name=name)


def write_tagged_corpus(corpus: Corpus) -> str:
    """Render a Corpus back to the vertical format.

    Sentences that compressed down to zero tokens are dropped; an instance with
    no tokens at all cannot be represented and raises EmptyInstance.
    """
    blocks: list[str] = []
    for idx, instance in enumerate(corpus.instances):
        lines = [f"{_HEADER_PREFIX} {instance.label.value}"]
        kept = [s for s in instance.sentences if len(s) > 0]
        if not kept:
            raise EmptyInstance(f"instance {idx} has no words left to write")
        for sentence in kept:
            for word, tag in zip(sentence.words, sentence.tags):
                lines.append(f"{word}\t{tag.value}")
            lines.append("")
        blocks.append("\n".join(lines))
    return "\n".join(blocks) + "\n"


def split_train_test(
    corpus: Corpus, train_fraction: float = 0.7, seed: int = 0
) -> tuple[Corpus, Corpus]:
    """Stratified split: shuffle per label, deterministic for a fixed seed.

    Raises TooFewInstances when either side would be empty or a label class
    would vanish from the training side.
    """
    if not 0 < train_fraction < 1:
        raise ValueError(f"train_fraction must be in (0,1), got {train_fraction}")

    by_label: dict[Label, list[int]] = {}
    for i, instance in enumerate(corpus.instances):
        by_label.setdefault(instance.label, []).append(i)

    rng = random.Random(seed)
    train_idx: list[int] = []
    test_idx: list[int] = []
    for lbl in sorted(by_label, key=lambda label: label.value):
        indices = by_label[lbl]
        if len(indices) < 2:
            raise TooFewInstances(
                f"label {lbl} has {len(indices)} instance(s), need at least 2 to split"
            )
        shuffled = indices[:]
        rng.shuffle(shuffled)
        n_train = round(train_fraction * len(indices))
        if n_train == 0:
            raise TooFewInstances(f"label {lbl} would be absent from the train split")
        if n_train == len(indices):
            n_train -= 1  # keep the test side non-empty for this label
        train_idx.extend(shuffled[:n_train])
        test_idx.extend(shuffled[n_train:])

    train_idx.sort()
    test_idx.sort()
    train = Corpus(tuple(corpus.instances[i] for i in train_idx), name=f"{corpus.name}/train")
    test = Corpus(tuple(corpus.instances[i] for i in test_idx), name=f"{corpus.name}/test")
    return train, test


def corpus_word_count(corpus: Corpus) -> int:
    return sum(instance.word_count for instance in corpus.instances)
