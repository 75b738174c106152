"""Raw review files: one review per line as `<label><TAB><text>`."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

VALID_LABELS = ("positive", "negative")


class ReviewFormatError(Exception):
    """Malformed raw review line. Carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SamplingError(ValueError):
    """A balanced sample was requested that the input cannot supply."""


@dataclass(frozen=True)
class RawReview:
    text: str
    label: str

    def __post_init__(self):
        if self.label not in VALID_LABELS:
            raise ValueError(f"label must be one of {VALID_LABELS}, got {self.label!r}")
        if not self.text.strip():
            raise ValueError("review text must be non-empty")
        if "\n" in self.text:
            raise ValueError("review text must be a single line")


def parse_reviews(text: str) -> list[RawReview]:
    """Blank lines are skipped; everything else must be `label<TAB>text`."""
    reviews: list[RawReview] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        if "\t" not in line:
            raise ReviewFormatError("expected <label><TAB><text>", lineno)
        label, body = line.split("\t", 1)
        if label not in VALID_LABELS:
            raise ReviewFormatError(f"unknown label {label!r}", lineno)
        if not body.strip():
            raise ReviewFormatError("empty review text", lineno)
        reviews.append(RawReview(body, label))
    return reviews


def write_reviews(reviews: Sequence[RawReview]) -> str:
    return "".join(f"{r.label}\t{r.text}\n" for r in reviews)


def sample_balanced(
    reviews: Sequence[RawReview], n_per_label: int, seed: int
) -> list[RawReview]:
    """Draw exactly n_per_label reviews of each label, seeded.

    Selected reviews keep their input order. Raises SamplingError naming the
    label class that cannot supply enough reviews.
    """
    if n_per_label < 1:
        raise ValueError(f"n_per_label must be positive, got {n_per_label}")
    indices: dict[str, list[int]] = {label: [] for label in VALID_LABELS}
    for i, review in enumerate(reviews):
        indices[review.label].append(i)
    for label in VALID_LABELS:
        have = len(indices[label])
        if have < n_per_label:
            raise SamplingError(f"need {n_per_label} {label} reviews, input has {have}")
    rng = random.Random(seed)
    keep = sorted(
        idx for label in VALID_LABELS for idx in rng.sample(indices[label], n_per_label)
    )
    return [reviews[i] for i in keep]
