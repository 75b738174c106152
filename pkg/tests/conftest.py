import pathlib

import pytest

from parsec.corpus import parse_tagged_corpus
from parsec.sentiment import load_lexicon, load_negations

DATA = pathlib.Path(__file__).resolve().parent.parent / "data" / "synthetic"


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def reviews_corpus():
    return parse_tagged_corpus((DATA / "reviews_200.tagged").read_text(), name="reviews")


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon((DATA / "lexicon.tsv").read_text())


@pytest.fixture(scope="session")
def negations():
    return load_negations((DATA / "negations.txt").read_text())
