"""Acceptance: the prepared corpus parses cleanly and the worked example tags
come back exactly, both through the real subprocess path.
"""

from parsec import parse_tagged_corpus
from tagprep import ExternalTagger, RawReview, parse_reviews, tag_reviews


def ok(line):
    print(f"PASS {line}")


def test_fifty_review_fixture_round_trips(stub_command, fixture_text):
    reviews = parse_reviews(fixture_text)
    assert len(reviews) == 50
    corpus_text = tag_reviews(reviews, ExternalTagger(stub_command))
    corpus = parse_tagged_corpus(corpus_text, "fixture")

    assert len(corpus.instances) == 50
    words = sum(i.word_count for i in corpus.instances)
    ok(f"tagprep round trip: 50 reviews tagged, parsed with zero errors, {words} tokens")


def test_example_sentence_tags(stub_command):
    out = tag_reviews([RawReview("this is a great product", "positive")],
                      ExternalTagger(stub_command))
    corpus = parse_tagged_corpus(out, "example")
    tags = [t.value for t in corpus.instances[0].sentences[0].tags]

    assert tags == ["DT", "VBZ", "DT", "JJ", "NN"]
    ok("example sentence tagged DT VBZ DT JJ NN through the external tagger")
