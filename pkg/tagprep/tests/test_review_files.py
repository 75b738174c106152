"""Raw review file parsing, writing, and balanced sampling."""

import pytest

from tagprep import (
    RawReview,
    ReviewFormatError,
    SamplingError,
    parse_reviews,
    sample_balanced,
    write_reviews,
)


def test_parse_happy_path():
    reviews = parse_reviews("positive\tgood stuff\nnegative\tbad stuff\n")
    assert [r.label for r in reviews] == ["positive", "negative"]
    assert reviews[0].text == "good stuff"


def test_blank_lines_are_skipped():
    reviews = parse_reviews("\npositive\tfine\n\n\nnegative\tnot fine\n")
    assert len(reviews) == 2


def test_text_may_contain_tabs():
    # only the first tab separates label from text
    (review,) = parse_reviews("positive\ta\tb\tc\n")
    assert review.text == "a\tb\tc"


@pytest.mark.parametrize(
    "content, line",
    [
        ("positive no tab here\n", 1),
        ("positive\tok\nmaybe\tmeh\n", 2),
        ("positive\tok\n\nnegative\t   \n", 3),
    ],
)
def test_parse_rejects_malformed_lines(content, line):
    with pytest.raises(ReviewFormatError) as info:
        parse_reviews(content)
    assert info.value.line == line


def test_parse_empty_text_gives_no_reviews():
    assert parse_reviews("") == []
    assert parse_reviews("\n\n") == []


@pytest.mark.parametrize(
    "text, label",
    [
        ("fine", "neutral"),
        ("   ", "positive"),
        ("two\nlines", "positive"),
    ],
)
def test_raw_review_validation(text, label):
    with pytest.raises(ValueError):
        RawReview(text, label)


def test_write_parse_round_trip(fixture_text):
    reviews = parse_reviews(fixture_text)
    assert parse_reviews(write_reviews(reviews)) == reviews


def test_fixture_is_balanced(fixture_text):
    reviews = parse_reviews(fixture_text)
    assert len(reviews) == 50
    assert sum(r.label == "positive" for r in reviews) == 25


class TestSampleBalanced:
    def test_exact_counts(self, fixture_text):
        sampled = sample_balanced(parse_reviews(fixture_text), 10, seed=1)
        assert len(sampled) == 20
        assert sum(r.label == "positive" for r in sampled) == 10
        assert sum(r.label == "negative" for r in sampled) == 10

    def test_same_seed_same_sample(self, fixture_text):
        reviews = parse_reviews(fixture_text)
        assert sample_balanced(reviews, 8, seed=42) == sample_balanced(reviews, 8, seed=42)

    def test_different_seed_different_sample(self, fixture_text):
        reviews = parse_reviews(fixture_text)
        draws = {tuple(r.text for r in sample_balanced(reviews, 8, seed=s)) for s in range(6)}
        assert len(draws) > 1

    def test_preserves_input_order(self, fixture_text):
        reviews = parse_reviews(fixture_text)
        sampled = sample_balanced(reviews, 12, seed=3)
        positions = [reviews.index(r) for r in sampled]
        assert positions == sorted(positions)

    def test_whole_corpus_is_a_valid_sample(self, fixture_text):
        reviews = parse_reviews(fixture_text)
        assert len(sample_balanced(reviews, 25, seed=0)) == 50

    def test_error_names_deficient_class(self, fixture_text):
        reviews = parse_reviews(fixture_text)
        only_positive = [r for r in reviews if r.label == "positive"]
        with pytest.raises(SamplingError, match="negative"):
            sample_balanced(only_positive, 5, seed=0)
        with pytest.raises(SamplingError, match="need 26 positive"):
            sample_balanced(reviews, 26, seed=0)

    def test_rejects_nonpositive_n(self, fixture_text):
        with pytest.raises(ValueError, match="positive"):
            sample_balanced(parse_reviews(fixture_text), 0, seed=0)
