"""Test della resa dei report."""

import json

import pytest

from singstar.core.errors import SingstarError
from singstar.reporting.report_generator import GeneratoreReport

VOCI = [("group", "S3"), ("order", "6"), ("note", "prima"), ("note", "seconda")]


@pytest.fixture
def generatore():
    return GeneratoreReport()


def test_testo(generatore):
    assert generatore.render(VOCI) == "group: S3\norder: 6\nnote: prima\nnote: seconda\n"
    assert generatore.render([]) == ""


def test_markdown(generatore):
    testo = generatore.render(VOCI, "markdown", titolo="singstar symmetry")
    righe = testo.splitlines()
    assert righe[0] == "# singstar symmetry"
    assert "| order | 6 |" in righe
    assert testo.endswith("\n")


def test_json_con_chiavi_ripetute(generatore):
    testo = generatore.render(VOCI, "json", titolo="t")
    assert testo.endswith("\n")
    assert json.loads(testo) == {
        "title": "t",
        "group": "S3",
        "order": "6",
        "note": ["prima", "seconda"],
    }
    tre = GeneratoreReport.come_dizionario([("a", "1"), ("a", "2"), ("a", "3")])
    assert tre == {"a": ["1", "2", "3"]}


def test_formato_sconosciuto(generatore):
    with pytest.raises(SingstarError):
        generatore.render(VOCI, "html")


def test_esporta_json(tmp_path):
    percorso = tmp_path / "report.json"
    GeneratoreReport.esporta_json({"group": "(Z3)^2 ⋊ S3"}, percorso)
    assert json.loads(percorso.read_text(encoding="utf-8")) == {"group": "(Z3)^2 ⋊ S3"}
    assert "⋊" in percorso.read_text(encoding="utf-8")
