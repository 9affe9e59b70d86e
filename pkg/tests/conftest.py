from __future__ import annotations

from importlib import resources
from pathlib import Path

import pytest

from wirtlab.dsl import parse_diagram


def corpus_dir() -> Path:
    return Path(resources.files("wirtlab") / "corpus")


def corpus_path(stem: str) -> Path:
    return corpus_dir() / (stem + ".wd")


def load(stem: str):
    return parse_diagram(corpus_path(stem).read_text(), name=stem)


def all_corpus_stems() -> list[str]:
    return sorted(p.stem for p in corpus_dir().glob("*.wd"))


@pytest.fixture(scope="session")
def corpus():
    return {stem: load(stem) for stem in all_corpus_stems()}
