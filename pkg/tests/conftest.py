from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import settings

from leavitt import parse_document

CORPUS = Path(__file__).resolve().parent.parent / "corpus"

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def corpus_documents():
    return [parse_document(p.read_text()) for p in sorted(CORPUS.glob("*.lpa"))]


def corpus_graphs():
    return [d.family.graph for d in corpus_documents() if d.kind == "finite"]


@pytest.fixture
def corpus_dir() -> Path:
    return CORPUS
