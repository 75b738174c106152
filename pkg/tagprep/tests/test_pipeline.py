"""tag_reviews: raw reviews through a tagger into parseable corpus text."""

import pytest

from parsec import Label, PosTag, parse_tagged_corpus
from tagprep import (
    ExternalTagger,
    FallbackTagger,
    RawReview,
    TagMappingError,
    parse_reviews,
    tag_reviews,
)


@pytest.fixture(scope="module")
def fixture_reviews(fixture_text):
    return parse_reviews(fixture_text)


def test_worked_example_exact_output(stub_command):
    out = tag_reviews([RawReview("this is a great product", "positive")],
                      ExternalTagger(stub_command))
    assert out == (
        "#label positive\n"
        "this\tDT\n"
        "is\tVBZ\n"
        "a\tDT\n"
        "great\tJJ\n"
        "product\tNN\n"
        "\n"
    )


def test_fixture_round_trips_through_external_tagger(stub_command, fixture_reviews):
    corpus = parse_tagged_corpus(tag_reviews(fixture_reviews, ExternalTagger(stub_command)),
                                 "fixture")
    assert len(corpus.instances) == 50
    assert [i.label.value for i in corpus.instances] == [r.label for r in fixture_reviews]


def test_fixture_round_trips_through_fallback(fixture_reviews):
    corpus = parse_tagged_corpus(tag_reviews(fixture_reviews, FallbackTagger()), "fixture")
    assert len(corpus.instances) == 50


def test_token_counts_preserved_per_sentence(stub_command, fixture_reviews):
    tagger = ExternalTagger(stub_command)
    corpus = parse_tagged_corpus(tag_reviews(fixture_reviews, tagger), "fixture")
    for review, instance in zip(fixture_reviews, corpus.instances):
        emitted = [len(s) for s in tagger(review.text)]
        parsed = [len(s) for s in instance.sentences]
        assert parsed == emitted


def test_bracket_tags_land_in_the_corpus(stub_command):
    review = RawReview("Works perfectly (even after a year) and the price was low.",
                       "positive")
    corpus = parse_tagged_corpus(tag_reviews([review], ExternalTagger(stub_command)), "b")
    tags = [t for s in corpus.instances[0].sentences for t in s.tags]
    assert PosTag.OPEN_PAREN in tags and PosTag.CLOSE_PAREN in tags


def test_labels_carry_through(stub_command):
    reviews = [RawReview("a great product", "positive"),
               RawReview("an awful product", "negative")]
    corpus = parse_tagged_corpus(tag_reviews(reviews, ExternalTagger(stub_command)), "l")
    assert [i.label for i in corpus.instances] == [Label.POSITIVE, Label.NEGATIVE]


def test_empty_input_warns_and_yields_empty_output():
    with pytest.warns(UserWarning, match="no reviews"):
        assert tag_reviews([], FallbackTagger()) == ""


def test_unmappable_tag_propagates(stub_command):
    with pytest.raises(TagMappingError, match="XX"):
        tag_reviews([RawReview("so zzodd here", "negative")], ExternalTagger(stub_command))
