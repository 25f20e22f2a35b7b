"""Test della riga di comando: codici di uscita e report stabili."""

import json

import pandas as pd

from singstar import __version__
from singstar.cli import descrivi_grafo, main
from singstar.graphs.chain_graph import ChainGraph
from singstar.graphs.plumbing import plumbing_da_catena


def _esegui(capsys, *argv):
    codice = main([str(a) for a in argv])
    uscita = capsys.readouterr()
    return codice, uscita.out, uscita.err


def test_invarianti_d237(capsys, data_dir):
    codice, out, _ = _esegui(capsys, "invariants", data_dir / "d237.star", "--epsilon", 1)
    assert codice == 0
    righe = out.splitlines()
    assert "pp: 1/42" in righe
    assert "seifert_pairs: (2,1) (3,1) (7,1)" in righe
    assert "link_homology: 0" in righe
    assert "ganter_bound: 1" in righe


def test_fermat_3(capsys):
    codice, out, _ = _esegui(capsys, "family", "fermat", 3)
    assert codice == 0
    assert "order: 54" in out.splitlines()
    assert "splits: no" in out.splitlines()


def test_hj(capsys):
    assert _esegui(capsys, "hj", "expand", "8/5") == (0, "2 3 2\n", "")
    assert _esegui(capsys, "hj", "eval", 2, 3, 2) == (0, "8/5\n", "")
    assert _esegui(capsys, "hj", "eval", 4)[1] == "4\n"
    codice, out, _ = _esegui(capsys, "hj", "eval", 2, 3, 2, "--keyed")
    assert codice == 0
    assert out.splitlines() == ["n: 8", "q: 5", "fraction: 8/5"]
    assert _esegui(capsys, "hj", "expand", "8/5", "--keyed")[1] == "chain: 2 3 2\n"


def test_hj_argomenti_malformati(capsys):
    for argv in (("expand", "8"), ("expand", "8/x"), ("expand", "8/5", "3"), ("eval", 2, "tre")):
        codice, out, err = _esegui(capsys, "hj", *argv)
        assert codice == 2
        assert out == ""
        assert err.startswith("usage: ")
        assert "error: " in err


def test_validate(capsys, data_dir, scrivi):
    codice, out, _ = _esegui(capsys, "validate", data_dir / "d237.star", "--ids")
    assert codice == 0
    assert out.splitlines()[0] == "status: OK"
    assert "curve 3: branch 3 position 1 weight 7" in out

    indefinito = scrivi("d222.star", "genus 0\ncentral 1\nbranch 2\nbranch 2\nbranch 2\n")
    codice, out, _ = _esegui(capsys, "validate", indefinito)
    assert codice == 1
    assert "status: INVALID" in out
    assert "definite: no" in out


def test_errore_di_sintassi(capsys, scrivi):
    rotto = scrivi("rotto.star", "genus 0\ncentral x\n")
    codice, out, err = _esegui(capsys, "validate", rotto)
    assert codice == 2
    assert out == ""
    assert "line 2" in err


def test_file_mancante(capsys, tmp_path):
    codice, _, err = _esegui(capsys, "invariants", tmp_path / "assente.star")
    assert codice == 1
    assert err.startswith("error: ")


def test_uso_errato(capsys):
    assert main([]) == 2
    assert main(["sconosciuto"]) == 2
    assert main(["quotient", "x.star"]) == 2
    capsys.readouterr()


def test_versione(capsys):
    assert main(["--version"]) == 0
    assert __version__ in capsys.readouterr().out


def test_quoziente_da_file(capsys, data_dir):
    codice, out, _ = _esegui(
        capsys,
        "quotient",
        data_dir / "d355.star",
        "--action",
        data_dir / "d355_sigma3.action",
    )
    assert codice == 0
    righe = out.splitlines()
    assert "result: star" in righe
    assert "graph: g=0 b=1 branches [2] [5] [6]" in righe
    assert "cyclic_quotient: no" in righe
    assert "contractions: 0" in righe


def test_quoziente_standard(capsys, data_dir):
    codice, out, _ = _esegui(
        capsys, "quotient", data_dir / "d355.star", "--standard", "cyclic", "--show-action"
    )
    assert codice == 0
    righe = out.splitlines()
    assert "graph: chain 2" in righe
    assert "cyclic_quotient: yes" in righe
    assert "contractions: 3" in righe
    assert righe[0] == "action: order 2"


def test_famiglia_d(capsys):
    codice, out, _ = _esegui(capsys, "family", "D", 5, 5, 5, "--quotients", "--engine")
    assert codice == 0
    righe = out.splitlines()
    assert righe[0] == "family: D_{5,5,5}"
    assert "quotient σ3: D_{10,2,5}" in righe
    assert "quotient S3: D_{2,3,10}" in righe
    assert "engine Z3: g=0 b=1 branches [3] [3] [5] agree: yes" in righe

    codice, out, _ = _esegui(capsys, "family", "D", 3, 3, 5, "--engine")
    assert any(r.startswith("engine σ1: ") and r.endswith("agree: yes") for r in out.splitlines())


def test_famiglia_t(capsys):
    codice, out, _ = _esegui(capsys, "family", "T", 7, "--engine")
    assert codice == 0
    assert "octahedral: g=0 b=2 branches [2] [2,2] [4]" in out.splitlines()
    assert out.rstrip().endswith("agree: yes")


def test_famiglia_parametri_errati(capsys):
    assert _esegui(capsys, "family", "D", 5, 5)[0] == 2
    assert _esegui(capsys, "family", "T", "sette")[0] == 2
    assert _esegui(capsys, "family", "T", 9)[0] == 1


def test_realizzazione(capsys, data_dir):
    codice, out, _ = _esegui(capsys, "family", "realize", data_dir / "armonici.points", 2)
    assert codice == 0
    assert "graph: g=0 b=2 branches [3] [3] [3] [3]" in out.splitlines()
    assert "order: 8" in out.splitlines()


def test_simmetria(capsys, data_dir):
    codice, out, _ = _esegui(
        capsys,
        "symmetry",
        data_dir / "quadrilatero.star",
        "--points",
        data_dir / "armonici.points",
    )
    assert codice == 0
    assert out.splitlines()[:2] == ["group: dihedral(8)", "order: 8"]

    codice, out, _ = _esegui(
        capsys, "symmetry", data_dir / "ellittica_b2.star", "--j-class", "one"
    )
    assert "order: 16" in out.splitlines()

    codice, _, err = _esegui(capsys, "symmetry", data_dir / "d237.star", "--j-class", "one")
    assert codice == 1
    assert err.startswith("error: ")


def test_moebius(capsys, data_dir):
    codice, out, _ = _esegui(capsys, "moebius", "crossratio", "0:1", "1:0", "1:1", "2:1")
    assert codice == 0
    assert out.splitlines() == ["cross_ratio: 1/2", "j: 1"]

    codice, out, _ = _esegui(capsys, "moebius", "group", data_dir / "armonici.points")
    righe = out.splitlines()
    assert righe[:2] == ["group: dihedral(8)", "order: 8"]
    assert sum(1 for r in righe if r.startswith("map: ")) == 8

    assert _esegui(capsys, "moebius", "j", "-1")[1] == "j: 1\n"
    assert _esegui(capsys, "moebius", "crossratio", "0:1", "1:0")[0] == 2


def test_formati_di_output(capsys):
    codice, out, _ = _esegui(capsys, "--format", "json", "hj", "expand", "8/5")
    assert codice == 0
    assert json.loads(out) == {"title": "singstar hj", "chain": "2 3 2"}

    out = _esegui(capsys, "--format", "markdown", "hj", "expand", "8/5")[1]
    assert out.splitlines()[0] == "# singstar hj"
    assert "| chain | 2 3 2 |" in out


def test_config_da_file(capsys, scrivi):
    config = scrivi("singstar.yaml", "report:\n  formato: json\n")
    out = _esegui(capsys, "--config", config, "hj", "expand", "7/2")[1]
    assert json.loads(out)["chain"] == "4 2"
    # la riga di comando prevale sul file
    out = _esegui(capsys, "--config", config, "--format", "text", "hj", "expand", "7/2")[1]
    assert out == "4 2\n"

    sbagliata = scrivi("singstar.toml", "")
    assert _esegui(capsys, "--config", sbagliata, "hj", "expand", "7/2")[0] == 1


def test_batch(capsys, data_dir, scrivi, tmp_path):
    uscita = tmp_path / "invarianti.csv"
    codice, out, _ = _esegui(
        capsys, "batch", data_dir / "d237.star", data_dir / "d355.star", "--output", uscita
    )
    assert codice == 0
    assert "errors: 0" in out.splitlines()
    df = pd.read_csv(uscita, dtype=str, keep_default_na=False)
    assert list(df["file"]) == ["d237.star", "d355.star"]
    assert list(df["pp"]) == ["1/42", "4/15"]

    rotto = scrivi("rotto.star", "genus 0\n")
    codice, out, _ = _esegui(capsys, "batch", data_dir / "d237.star", rotto, "--output", uscita)
    assert codice == 1
    assert "errors: 1" in out.splitlines()


def test_descrivi_grafo():
    assert descrivi_grafo(ChainGraph(())) == "smooth point"
    assert descrivi_grafo(ChainGraph((2, 3))) == "chain 2 3"
    assert descrivi_grafo(plumbing_da_catena([2, 2])) == "plumbing nodes 0:2 1:2 edges 0-1"


def test_simmetria_rispetta_il_limite_di_enumerazione(capsys, data_dir, scrivi):
    codice, out, _ = _esegui(capsys, "symmetry", data_dir / "d355.star")
    assert codice == 0
    assert any(r.startswith("note: faithful_on_torsion: yes") for r in out.splitlines())

    config = scrivi("limite.yaml", "reticolo:\n  limite_automorfismi: 1\n")
    codice, out, _ = _esegui(capsys, "--config", config, "symmetry", data_dir / "d355.star")
    assert codice == 0
    assert "group: Z2" in out.splitlines()
    assert not any("faithful_on_torsion" in r for r in out.splitlines())


def test_realizzazione_con_grado_malformato(capsys, data_dir):
    codice, _, err = _esegui(capsys, "family", "realize", data_dir / "armonici.points", "due")
    assert codice == 2
    assert "error: " in err
