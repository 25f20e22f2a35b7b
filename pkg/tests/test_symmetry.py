"""Test dei report di simmetria G/G1."""

from fractions import Fraction

import numpy as np
import pytest
from networkx.algorithms import isomorphism

from singstar.core.config import ClasseJ
from singstar.core.errors import ArithmeticDomainError, OptionsError
from singstar.graphs.star_graph import StarGraph, star_to_plumbing
from singstar.invariants.lattice import link_homology
from singstar.io_handlers.formati import load_points, parse_points
from singstar.symmetry.moebius import EQUIANHARMONIC, GroupDescription, label_preserving_group
from singstar.symmetry.report import (
    Determination,
    Splitting,
    SymmetryOptions,
    aut_gamma,
    criterio_scissione,
    elliptic_aut0_order,
    family_fermat,
    fermat_symmetry,
    realize_finite_group,
    symmetry_report,
)

QUADRILATERO = StarGraph(0, 3, ((3,), (3,), (3,), (3,)))


def test_aut_gamma():
    assert aut_gamma(StarGraph(0, 1, ((2,), (3,), (7,)))).order == 1
    assert aut_gamma(QUADRILATERO).description().name == "S4"
    g = StarGraph(0, 3, ((3,), (3,), (2,), (2,)))
    assert aut_gamma(g).order == 4
    assert aut_gamma(g).description().name == "Klein"
    h = StarGraph(0, 4, ((2,), (2,), (3,), (3,), (3,)))
    assert aut_gamma(h).description().name == "Z2 x S3"
    assert aut_gamma(h).order == 12


def test_tre_rami_esatto(d237, d355):
    report = symmetry_report(d237)
    assert (report.group_name, report.order) == ("trivial", 1)
    assert report.determination is Determination.EXACT
    assert report.splits is Splitting.YES
    assert report.embeds_in_aut_gamma

    report = symmetry_report(d355)
    assert (report.group_name, report.order) == ("Z2", 2)


def test_tre_rami_ignora_i_moduli(d355):
    report = symmetry_report(d355, SymmetryOptions(lam=Fraction(-1)))
    assert report.order == 2
    assert any("no moduli" in nota for nota in report.notes)


def test_quadrilatero_con_punti(data_dir):
    punti = load_points(data_dir / "armonici.points")
    report = symmetry_report(QUADRILATERO, SymmetryOptions(points=punti))
    assert (report.group_name, report.order) == ("dihedral(8)", 8)
    assert report.determination is Determination.EXACT
    # b dispari, diedrale di ordine 8: il criterio non decide
    assert report.splits is Splitting.UNKNOWN


def test_quadrilatero_con_lambda():
    report = symmetry_report(QUADRILATERO, SymmetryOptions(lam=Fraction(3)))
    assert report.group_name == "Klein"
    report = symmetry_report(QUADRILATERO, SymmetryOptions(j=EQUIANHARMONIC))
    assert (report.group_name, report.order) == ("A4", 12)


def test_quadrilatero_senza_moduli():
    report = symmetry_report(QUADRILATERO)
    assert (report.group_name, report.order) == ("S4", 24)
    assert report.determination is Determination.UPPER_BOUND
    assert report.splits is Splitting.UNKNOWN


def test_scissione_senza_moduli():
    """Aut Γ banale, Z2 o S3: ogni sottogruppo soddisfa il criterio."""
    g = StarGraph(0, 3, ((3,), (3,), (3,), (2,)))
    report = symmetry_report(g)
    assert report.group_name == "S3"
    assert report.splits is Splitting.YES
    g = StarGraph(0, 4, ((3,), (3,), (3,), (3,)))
    assert symmetry_report(g).splits is Splitting.YES


def test_punti_con_etichette_dai_rami():
    """Le etichette dei punti vengono sostituite dalle coppie di Seifert dei rami."""
    g = StarGraph(0, 3, ((3,), (2,), (3,), (2,)))
    punti = parse_points("point 0:1\npoint 1:0\npoint 1:1\npoint -1:1\n")
    report = symmetry_report(g, SymmetryOptions(points=punti))
    assert (report.group_name, report.order) == ("Z2", 2)


def test_opzioni_incompatibili(d237):
    punti = parse_points("point 0:1\npoint 1:0\npoint 1:1\n")
    with pytest.raises(OptionsError):
        symmetry_report(d237, SymmetryOptions(j_class=ClasseJ.ZERO))
    with pytest.raises(OptionsError):
        symmetry_report(QUADRILATERO, SymmetryOptions(points=punti))
    with pytest.raises(OptionsError):
        symmetry_report(QUADRILATERO, SymmetryOptions(points=punti, lam=Fraction(3)))
    cinque = StarGraph(0, 3, ((3,),) * 5)
    with pytest.raises(OptionsError):
        symmetry_report(cinque, SymmetryOptions(lam=Fraction(3)))
    with pytest.raises(OptionsError):
        symmetry_report(StarGraph(1, 2, ()), SymmetryOptions(lam=Fraction(3)))
    with pytest.raises(OptionsError):
        symmetry_report(StarGraph(2, 2, ()), SymmetryOptions(j_class=ClasseJ.ONE))


@pytest.mark.parametrize("b", [1, 2, 3])
@pytest.mark.parametrize("classe, k", [(ClasseJ.ZERO, 6), (ClasseJ.ONE, 4), (ClasseJ.GENERIC, 2)])
def test_ellittiche_semplici(b, classe, k):
    g = StarGraph(1, b, ())
    report = symmetry_report(g, SymmetryOptions(j_class=classe))
    assert report.order == b * b * k
    assert report.determination is Determination.EXACT
    assert report.splits is (Splitting.YES if b == 1 else Splitting.NO)
    assert not report.embeds_in_aut_gamma
    assert str(link_homology(g)) == ("Z^2" if b == 1 else f"Z^2 + Z/{b}")
    assert elliptic_aut0_order(classe) == k


def test_ellittica_senza_classe():
    report = symmetry_report(StarGraph(1, 2, ()))
    assert report.group_name == "(Z2)^2 ⋊ Aut0(E0)"
    assert report.order == 24
    assert report.determination is Determination.UPPER_BOUND
    report = symmetry_report(StarGraph(1, 2, ()), SymmetryOptions(j_class=ClasseJ.GENERIC))
    assert report.group_name == "(Z2)^2 ⋊ Z2"
    assert report.voci()[:3] == [("group", "(Z2)^2 ⋊ Z2"), ("order", "8"), ("splits", "no")]


def test_genere_alto():
    g = StarGraph(2, 5, ((2,),) * 7)
    report = symmetry_report(g)
    assert report.embeds_in_aut_gamma
    assert report.group_name == "S7"
    report = symmetry_report(StarGraph(2, 3, ()))
    assert report.group_name == "finite"
    assert report.order is None
    assert ("order", "unknown") in report.voci()
    assert ("embeds_in_aut_gamma", "no") in report.voci()


def test_limite_di_ganter(d237):
    report = symmetry_report(d237, SymmetryOptions(epsilon=1))
    assert report.ganter_bound == 1
    voci = report.voci()
    assert ("ganter_bound", "1") in voci
    assert voci[-1][0] == "note"
    assert voci[-1][1].startswith("ganter: ")


def test_criterio_scissione():
    assert criterio_scissione(2, GroupDescription.dihedral(8)) is Splitting.YES
    assert criterio_scissione(3, GroupDescription.cyclic(4)) is Splitting.YES
    assert criterio_scissione(3, GroupDescription.dihedral(6)) is Splitting.YES
    assert criterio_scissione(3, GroupDescription.dihedral(4)) is Splitting.UNKNOWN
    assert criterio_scissione(3, GroupDescription.tetrahedral()) is Splitting.UNKNOWN


@pytest.mark.parametrize("d", range(3, 13))
def test_fermat(d):
    report = fermat_symmetry(d)
    assert report.order == 6 * d * d
    assert report.splits is (Splitting.NO if d % 3 == 0 else Splitting.YES)
    assert report.group_name == f"(Z{d})^2 ⋊ S3"
    if d >= 4:
        assert report.ganter_bound == 42 * d * (d - 3)
        assert report.order <= report.ganter_bound
    else:
        assert report.ganter_bound is None


def test_fermat_dominio():
    with pytest.raises(ArithmeticDomainError):
        family_fermat(2)


def test_realizzazione_di_s3():
    cfg = parse_points("point 0:1 label=3/1\npoint 1:1 label=3/1\npoint 1:0 label=3/1\n")
    g = realize_finite_group(cfg, 2)
    assert g == StarGraph(0, 2, ((3,), (3,), (3,)))
    assert symmetry_report(g).group_name == "S3"
    with pytest.raises(ArithmeticDomainError):
        realize_finite_group(cfg, 1)


def test_realizzazione_del_gruppo_armonico(data_dir):
    cfg = load_points(data_dir / "armonici.points")
    g = realize_finite_group(cfg, 2)
    report = symmetry_report(g, SymmetryOptions(points=cfg))
    assert report.order == 8


def test_nota_di_fedelta(d237, d355):
    assert any(n.startswith("faithful_on_torsion: yes") for n in symmetry_report(d355).notes)
    assert not any(n.startswith("faithful") for n in symmetry_report(d237).notes)


def _automorfismi_per_forza_bruta(grafo: StarGraph) -> int:
    nx_grafo = star_to_plumbing(grafo).to_networkx()
    confronto = isomorphism.GraphMatcher(
        nx_grafo,
        nx_grafo,
        node_match=lambda a, b: (a["weight"], a["genus"]) == (b["weight"], b["genus"]),
    )
    return sum(1 for _ in confronto.isomorphisms_iter())


def test_aut_gamma_contro_forza_bruta():
    rng = np.random.default_rng(5)
    for _ in range(60):
        r = int(rng.integers(3, 7))
        rami = tuple(
            tuple(int(w) for w in rng.integers(2, 4, size=int(rng.integers(1, 3))))
            for _ in range(r)
        )
        g = StarGraph(0, int(rng.integers(1, 5)), rami, verifica_definitezza=False)
        assert aut_gamma(g).order == _automorfismi_per_forza_bruta(g)


@pytest.mark.parametrize(
    "righe, b",
    [
        (["0:1 label=3/1", "1:1 label=3/1", "1:0 label=3/1"], 2),
        (["0:1 label=2/1", "1:1 label=3/1", "1:0 label=7/1"], 1),
        (["0:1 label=3/1", "1:0 label=3/1", "1:1 label=3/1", "-1:1 label=3/1"], 2),
        (["0:1 label=3/1", "1:0 label=3/1", "1:1 label=2/1", "-1:1 label=2/1"], 2),
        (["0:1 label=5/2", "1:0 label=5/2", "1:1 label=5/2", "3:1 label=5/2"], 2),
        (["0:1 label=2/1", "1:0 label=2/1", "1:1 label=2/1", "-1:1 label=2/1", "2:1 label=2/1"], 3),
        (
            [
                "0:1 label=3/2",
                "1:0 label=3/2",
                "1:1 label=3/2",
                "-1:1 label=3/2",
                "2:1 label=3/2",
                "1:2 label=3/2",
            ],
            5,
        ),
    ],
)
def test_realizzazione_ordine_esatto(righe, b):
    """Il report sulla stella realizzata ha l'ordine del gruppo dei punti."""
    cfg = parse_points("".join(f"point {riga}\n" for riga in righe))
    g = realize_finite_group(cfg, b)
    report = symmetry_report(g, SymmetryOptions(points=cfg))
    assert report.order == len(label_preserving_group(cfg))
    assert report.determination is Determination.EXACT


def test_nota_di_fedelta_oltre_il_limite(d355):
    report = symmetry_report(d355, SymmetryOptions(limite_automorfismi=1))
    assert report.order == 2
    assert not any(n.startswith("faithful") for n in report.notes)
