import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
STUB = HERE / "stub_tagger.py"
DATA = HERE / "data"


@pytest.fixture(scope="session")
def stub_command() -> str:
    return f"{sys.executable} {STUB} {{input}}"


@pytest.fixture(scope="session")
def fixture_text() -> str:
    return (DATA / "reviews_50.tsv").read_text(encoding="utf-8")
