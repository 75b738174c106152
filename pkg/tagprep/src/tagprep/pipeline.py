"""Raw labeled reviews to tagged corpus text."""

from __future__ import annotations

import warnings
from typing import Sequence

from parsec import Corpus, Label, LabeledInstance, PosTag, TaggedSentence, write_tagged_corpus

from .reviews import RawReview
from .tagging import Tagger, normalize_tag


def tag_reviews(reviews: Sequence[RawReview], tagger: Tagger) -> str:
    """Tag every review and render the vertical corpus format.

    The output is produced by the corpus writer of the consuming package, so
    whatever that package parses, this emits. Token counts are exactly what
    the tagger returned; only tag strings are normalized.
    """
    if not reviews:
        warnings.warn("no reviews to tag; output is empty", stacklevel=2)
        return ""
    instances = []
    for review in reviews:
        sentences = []
        for sentence in tagger(review.text):
            words = tuple(word for word, _ in sentence)
            tags = tuple(PosTag(normalize_tag(raw, word)) for word, raw in sentence)
            sentences.append(TaggedSentence(words, tags))
        instances.append(LabeledInstance(tuple(sentences), Label(review.label)))
    return write_tagged_corpus(Corpus(tuple(instances)))
