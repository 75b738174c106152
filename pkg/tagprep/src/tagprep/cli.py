"""Command-line corpus preparation: tag raw reviews, draw balanced samples."""

from __future__ import annotations

import sys

import click

from .pipeline import tag_reviews
from .reviews import (
    ReviewFormatError,
    SamplingError,
    parse_reviews,
    sample_balanced,
    write_reviews,
)
from .tagging import ExternalTagger, FallbackTagger, TaggerUnavailable, TagMappingError

EXIT_USAGE = 2
# the request cannot be satisfied here: no working tagger, or not enough data
EXIT_UNSATISFIABLE = 3
EXIT_IO = 4


def _fail(code: int, message: str):
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        _fail(EXIT_IO, f"cannot read {path}: {exc.strerror}")


def _write(path: str | None, content: str):
    if path is None:
        click.echo(content, nl=False)
        return
    try:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(content)
    except OSError as exc:
        _fail(EXIT_IO, f"cannot write {path}: {exc.strerror}")


@click.group()
def main():
    """Prepare raw labeled reviews as tagged corpora."""


@main.command()
@click.option("--input", "input_path", required=True,
              help="Raw reviews, one `label<TAB>text` per line.")
@click.option("--out", "out_path", default=None,
              help="Output corpus file; stdout if omitted.")
@click.option("--tagger-cmd", default=None,
              help="External tagger command template containing {input}.")
@click.option("--fallback", is_flag=True,
              help="Use the bundled dictionary tagger instead of an external command.")
def tag(input_path, out_path, tagger_cmd, fallback):
    """Tag reviews and emit the vertical corpus format."""
    if tagger_cmd is None and not fallback:
        _fail(EXIT_USAGE, "choose a tagger: --tagger-cmd or --fallback")
    if tagger_cmd is not None and fallback:
        _fail(EXIT_USAGE, "--tagger-cmd and --fallback are mutually exclusive")
    try:
        tagger = FallbackTagger() if fallback else ExternalTagger(tagger_cmd)
    except ValueError as exc:
        _fail(EXIT_USAGE, str(exc))
    try:
        reviews = parse_reviews(_read(input_path))
    except ReviewFormatError as exc:
        _fail(EXIT_IO, str(exc))
    if not reviews:
        click.echo("warning: input has no reviews; writing empty output", err=True)
        _write(out_path, "")
        return
    try:
        corpus_text = tag_reviews(reviews, tagger)
    except TaggerUnavailable as exc:
        _fail(EXIT_UNSATISFIABLE, str(exc))
    except TagMappingError as exc:
        _fail(EXIT_IO, str(exc))
    _write(out_path, corpus_text)


@main.command()
@click.option("--input", "input_path", required=True,
              help="Raw reviews, one `label<TAB>text` per line.")
@click.option("--out", "out_path", default=None,
              help="Output review file; stdout if omitted.")
@click.option("--per-label", type=int, required=True,
              help="Reviews to keep from each label class.")
@click.option("--seed", type=int, default=0)
def sample(input_path, out_path, per_label, seed):
    """Draw a balanced random sample of reviews."""
    try:
        reviews = parse_reviews(_read(input_path))
    except ReviewFormatError as exc:
        _fail(EXIT_IO, str(exc))
    try:
        sampled = sample_balanced(reviews, per_label, seed)
    except SamplingError as exc:
        _fail(EXIT_UNSATISFIABLE, str(exc))
    except ValueError as exc:
        _fail(EXIT_USAGE, str(exc))
    _write(out_path, write_reviews(sampled))
