"""
Fixtures compartilhadas: documentos do corpus e estruturas de classes laterais.
"""
from pathlib import Path

import pytest

from config.settings import settings
from src.groups.cosets import build_coset_structure
from src.groups.parser import parse_group_spec


FIXTURES_DIR = Path(__file__).parent / "fixtures"
CORPUS_DIR = settings.base_dir / "corpus"

CORPUS_FILES = sorted(p.name for p in CORPUS_DIR.glob("*.txt"))


def spec_text(name: str) -> str:
    """Texto de um documento do corpus ou de tests/fixtures."""
    for directory in (CORPUS_DIR, FIXTURES_DIR):
        path = directory / name
        if path.exists():
            return path.read_text(encoding="utf-8")
    raise FileNotFoundError(name)


def spec_path(name: str) -> Path:
    for directory in (CORPUS_DIR, FIXTURES_DIR):
        path = directory / name
        if path.exists():
            return path
    raise FileNotFoundError(name)


def load_structure(name: str):
    G, H = parse_group_spec(spec_text(name))
    return build_coset_structure(G, H)


@pytest.fixture(scope="session")
def s4_a4():
    return load_structure("s4_a4.txt")


@pytest.fixture(scope="session")
def f20_c5():
    return load_structure("f20_c5.txt")


@pytest.fixture(scope="session")
def dic3_c3():
    return load_structure("dic3_c3.txt")


@pytest.fixture(scope="session")
def trivial():
    return load_structure("trivial.txt")


@pytest.fixture(scope="session", params=CORPUS_FILES)
def corpus_structure(request):
    """Cada grupo do corpus, um por vez."""
    return request.param, load_structure(request.param)
