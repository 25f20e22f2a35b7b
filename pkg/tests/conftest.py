"""Configurazione comune dei test: percorso di src e corpus di grafi."""

import sys
from pathlib import Path

import pytest

# Aggiungi src al path
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from singstar.graphs.star_graph import StarGraph  # noqa: E402

DATA_DIR = Path(__file__).parent.parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def d237() -> StarGraph:
    return StarGraph(0, 1, ((2,), (3,), (7,)))


@pytest.fixture
def d355() -> StarGraph:
    return StarGraph(0, 1, ((3,), (5,), (5,)))


@pytest.fixture
def d4_star() -> StarGraph:
    """D4: centro 2 con tre rami [2]."""
    return StarGraph(0, 2, ((2,), (2,), (2,)))


@pytest.fixture
def e8_star() -> StarGraph:
    """E8: rami di lunghezza 1, 2 e 4."""
    return StarGraph(0, 2, ((2,), (2, 2), (2, 2, 2, 2)))


@pytest.fixture
def scrivi(tmp_path: Path):
    """Scrive un file di prova in tmp_path e ne restituisce il percorso."""

    def _scrivi(nome: str, testo: str) -> Path:
        percorso = tmp_path / nome
        percorso.write_text(testo, encoding="utf-8")
        return percorso

    return _scrivi
