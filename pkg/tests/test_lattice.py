"""Test del reticolo d'intersezione e del gruppo discriminante."""

from fractions import Fraction
from math import prod

import numpy as np
import pytest

from singstar.core.errors import NonDefiniteError, SingstarError
from singstar.graphs.plumbing import PlumbingGraph, PlumbingNode
from singstar.graphs.star_graph import StarGraph, star_to_plumbing
from singstar.invariants.lattice import (
    GraphAutomorphism,
    acts_trivially_on_discriminant,
    automorphism_matrix,
    determinant,
    discriminant_group,
    intersection_matrix,
    is_negative_definite,
    leading_minors,
    link_homology,
    smith_normal_form,
    torsion_action_faithful,
)
from singstar.invariants.seifert import seifert_pairs


def _fattori(m):
    _, d, _ = smith_normal_form(np.array(m, dtype=object))
    return [int(d[k, k]) for k in range(min(d.shape))]


def test_snf_piccola():
    assert _fattori([[2, 0], [0, 3]]) == [1, 6]


def test_snf_trasformazioni():
    m = np.array([[2, 4, 4], [-6, 6, 12], [10, -4, -16]], dtype=object)
    u, d, v = smith_normal_form(m)
    assert np.array_equal(u.dot(m).dot(v), d)
    diagonale = [int(d[k, k]) for k in range(3)]
    assert [abs(x) for x in diagonale] == [2, 6, 12]


def test_d4(d4_star):
    plumbing = star_to_plumbing(d4_star)
    matrice = intersection_matrix(plumbing)
    assert [abs(x) for x in _fattori(matrice.matrice)] == [1, 1, 2, 2]
    gruppo = discriminant_group(plumbing)
    assert gruppo.invariant_factors == (2, 2)
    assert str(gruppo) == "Z/2 + Z/2"
    assert abs(determinant(matrice)) == 4


def test_e8(e8_star):
    plumbing = star_to_plumbing(e8_star)
    assert abs(determinant(intersection_matrix(plumbing))) == 1
    assert discriminant_group(plumbing).is_trivial
    assert str(link_homology(e8_star)) == "0"


def test_d237_unimodulare(d237):
    assert discriminant_group(star_to_plumbing(d237)).is_trivial


def test_d7_con_due_rami_corti():
    """Rami [2],[2],[2,2,2,2]: D7, gruppo ciclico di ordine 4."""
    g = StarGraph(0, 2, ((2,), (2,), (2, 2, 2, 2)))
    assert discriminant_group(star_to_plumbing(g)).invariant_factors == (4,)


@pytest.mark.parametrize("b", [1, 2, 5, 12])
def test_nodo_singolo(b):
    p = PlumbingGraph((PlumbingNode(0, 3, b),))
    gruppo = discriminant_group(p)
    assert gruppo.order == b
    assert gruppo.invariant_factors == (() if b == 1 else (b,))


@pytest.mark.parametrize("b", [1, 2, 3])
def test_omologia_ellittica(b):
    omologia = link_homology(StarGraph(1, b, ()))
    assert omologia.free_rank == 2
    assert omologia.torsion.order == b


def test_minori_e_definitezza():
    m = [[-2, 1], [1, -2]]
    assert leading_minors(m) == [-2, 3]
    assert is_negative_definite(m)
    assert not is_negative_definite([[-1, 1], [1, -1]])
    assert not is_negative_definite([[0, 1], [1, -2]])


def test_discriminante_non_definito():
    g = StarGraph(0, 1, ((2,), (2,), (2,)), verifica_definitezza=False)
    with pytest.raises(NonDefiniteError):
        discriminant_group(star_to_plumbing(g))


def _stella_casuale(rng) -> StarGraph:
    genere = int(rng.integers(0, 3))
    r = int(rng.integers(3 if genere == 0 else 0, 6))
    rami = tuple(
        tuple(int(w) for w in rng.integers(2, 6, size=int(rng.integers(1, 4))))
        for _ in range(r)
    )
    return StarGraph(genere, int(rng.integers(1, 6)), rami, verifica_definitezza=False)


def test_coerenza_su_grafi_casuali():
    """|det| = Π fattori invarianti e definitezza ⟺ grado di Seifert > 0."""
    rng = np.random.default_rng(20240611)
    definiti = 0
    for _ in range(1000):
        g = _stella_casuale(rng)
        plumbing = star_to_plumbing(g)
        matrice = intersection_matrix(plumbing)
        definito = is_negative_definite(matrice)
        assert definito == (g.grado_orbifold() > 0)
        if not definito:
            continue
        definiti += 1
        gruppo = discriminant_group(plumbing)
        assert abs(determinant(matrice)) == gruppo.order
        # |det| = Π α_i · (b - Σ β_i/α_i)
        alfa = prod(c.alpha for c in seifert_pairs(g))
        assert Fraction(abs(determinant(matrice))) == alfa * g.grado_orbifold()
    assert definiti > 100


def test_matrice_di_automorfismo(d355):
    plumbing = star_to_plumbing(d355)
    scambio = GraphAutomorphism.from_branch_permutation(d355, (0, 2, 1))
    assert scambio.as_dict() == {0: 0, 1: 1, 2: 3, 3: 2}
    assert scambio.order() == 2
    assert scambio.compose(scambio).is_identity
    p = automorphism_matrix(plumbing, scambio)
    m = intersection_matrix(plumbing).matrice
    assert np.array_equal(p.dot(m).dot(p.T), m)


def test_automorfismo_non_compatibile(d237):
    with pytest.raises(SingstarError):
        GraphAutomorphism.from_branch_permutation(d237, (1, 0, 2))
    with pytest.raises(SingstarError):
        GraphAutomorphism(((0, 1), (1, 1)))


def test_azione_banale_sul_discriminante(d4_star):
    """Su D4 lo scambio di due rami non agisce banalmente su Z/2 + Z/2."""
    plumbing = star_to_plumbing(d4_star)
    scambio = GraphAutomorphism.from_branch_permutation(d4_star, (1, 0, 2))
    assert not acts_trivially_on_discriminant(plumbing, scambio)
    identita = GraphAutomorphism.identity(plumbing.ids)
    assert acts_trivially_on_discriminant(plumbing, identita)


CORPUS_FEDELTA = [
    StarGraph(0, 2, ((2,), (2,), (2,))),
    StarGraph(0, 2, ((3,), (3,), (3,))),
    StarGraph(0, 2, ((2, 2), (2, 2), (2,))),
    StarGraph(0, 3, ((2, 2), (2, 2), (2,))),
    StarGraph(0, 2, ((3,), (3,), (3,), (3,))),
    StarGraph(0, 3, ((2,), (2,), (2,), (2,))),
    StarGraph(0, 3, ((3,), (3,), (2,), (2,))),
    StarGraph(0, 1, ((3,), (5,), (5,))),
    StarGraph(0, 1, ((4,), (4,), (4,))),
    StarGraph(0, 1, ((5,), (5,), (5,))),
    StarGraph(0, 1, ((3,), (4,), (4,))),
    StarGraph(0, 1, ((2,), (5,), (5,))),
    StarGraph(0, 2, ((2,), (2,), (3,))),
    StarGraph(0, 2, ((3,), (3,), (2,))),
    StarGraph(0, 3, ((3,), (3,), (3,))),
    StarGraph(0, 2, ((2, 3), (2, 3), (2,))),
    StarGraph(0, 4, ((2,), (2,), (2,), (2,), (2,))),
    StarGraph(0, 3, ((4,), (4,), (4,), (4,))),
    StarGraph(0, 2, ((2,), (2,), (2, 2))),
    StarGraph(0, 2, ((3, 2), (3, 2), (3, 2))),
    StarGraph(0, 5, ((2,), (2,), (2,), (2,), (2,), (2,))),
    StarGraph(0, 1, ((3,), (3,), (4,))),
]


@pytest.mark.parametrize("grafo", CORPUS_FEDELTA, ids=str)
def test_fedelta_sulla_torsione(grafo):
    assert any(len(indici) >= 2 for _, indici in grafo.branch_classes())
    assert torsion_action_faithful(grafo)


def test_limite_di_enumerazione():
    g = StarGraph(0, 5, ((2,),) * 8)
    with pytest.raises(SingstarError):
        torsion_action_faithful(g, limite=100)


def _automorfismi(grafo):
    return [
        GraphAutomorphism.from_branch_permutation(grafo, p) for p in grafo.branch_permutations()
    ]


@pytest.mark.parametrize("grafo", CORPUS_FEDELTA, ids=str)
def test_ogni_automorfismo_preserva_la_matrice(grafo):
    plumbing = star_to_plumbing(grafo)
    m = intersection_matrix(plumbing).matrice
    for automorfismo in _automorfismi(grafo):
        p = automorphism_matrix(plumbing, automorfismo)
        assert np.array_equal(p.dot(m).dot(p.T), m)


@pytest.mark.parametrize(
    "grafo",
    [
        StarGraph(0, 2, ((2,), (2,), (2,))),
        StarGraph(0, 2, ((3,), (3,), (3,))),
        StarGraph(0, 3, ((2,), (2,), (2,), (2,))),
        StarGraph(0, 2, ((2, 2), (2, 2), (2,))),
    ],
    ids=str,
)
def test_nucleo_chiuso(grafo):
    """Gli automorfismi banali sul discriminante formano un sottogruppo."""
    plumbing = star_to_plumbing(grafo)
    gruppo = discriminant_group(plumbing)
    nucleo = [
        a for a in _automorfismi(grafo) if acts_trivially_on_discriminant(plumbing, a, gruppo)
    ]
    assert any(a.is_identity for a in nucleo)
    for a in nucleo:
        assert acts_trivially_on_discriminant(plumbing, a.inverse(), gruppo)
        for b in nucleo:
            assert acts_trivially_on_discriminant(plumbing, a.compose(b), gruppo)
