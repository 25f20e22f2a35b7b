"""Test dell'export tabellare degli invarianti."""

import pandas as pd
import pytest

from singstar.core.errors import SingstarError
from singstar.io_handlers.csv_handler import CSVHandler


@pytest.fixture
def risultati(data_dir, scrivi):
    rotto = scrivi("rotto.star", "genus 0\ncentral 1\nbranch 1\n")
    percorsi = [data_dir / "d237.star", data_dir / "ellittica_b2.star", rotto]
    return CSVHandler.calcola_invarianti(percorsi, epsilon=1)


def test_calcola_invarianti(risultati):
    d237, ellittica, rotto = risultati
    assert d237["file"] == "d237.star"
    assert d237["pp"] == "1/42"
    assert d237["ganter_bound"] == "1"
    assert "ganter_caveat" not in d237
    assert ellittica["link_homology"] == "Z^2 + Z/2"
    assert ellittica["free_rank"] == "2"
    assert set(rotto) == {"file", "error"}


def test_export_csv(tmp_path, risultati):
    percorso = tmp_path / "invarianti.csv"
    CSVHandler.esporta_risultati(risultati, percorso)
    df = CSVHandler.leggi_risultati(percorso)
    assert list(df.columns) == CSVHandler.COLONNE
    assert list(df["file"]) == ["d237.star", "ellittica_b2.star", "rotto.star"]
    assert df.loc[0, "error"] == ""
    assert df.loc[2, "error"] != ""
    assert df.loc[1, "discriminant_group"] == "Z/2"


def test_export_xlsx(tmp_path, risultati):
    percorso = tmp_path / "invarianti.xlsx"
    CSVHandler.esporta_risultati(risultati, percorso, formato="xlsx")
    df = pd.read_excel(percorso, engine="openpyxl", dtype=str)
    assert list(df["file"]) == ["d237.star", "ellittica_b2.star", "rotto.star"]


def test_formato_non_supportato(tmp_path, risultati):
    with pytest.raises(SingstarError):
        CSVHandler.esporta_risultati(risultati, tmp_path / "x.parquet", formato="parquet")
