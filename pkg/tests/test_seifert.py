"""Test degli invarianti di Seifert."""

from fractions import Fraction

import pytest

from singstar.core.errors import ArithmeticDomainError, NonDefiniteError
from singstar.graphs.star_graph import StarGraph
from singstar.invariants.seifert import (
    SeifertPair,
    canonical_pp,
    ganter_bound,
    orbifold_euler_characteristic,
    seifert_degree,
    seifert_pairs,
)
from singstar.symmetry.report import family_fermat


def test_d237(d237):
    assert seifert_pairs(d237) == [SeifertPair(2, 1), SeifertPair(3, 1), SeifertPair(7, 1)]
    assert seifert_degree(d237) == Fraction(1, 42)
    assert orbifold_euler_characteristic(d237) == Fraction(-1, 42)
    assert canonical_pp(d237) == Fraction(1, 42)
    assert ganter_bound(d237, 1) == 1


def test_coppie_di_rami_lunghi():
    g = StarGraph(0, 2, ((2, 3, 2), (3,), (2, 2)))
    assert [str(c) for c in seifert_pairs(g)] == ["(8,5)", "(3,1)", "(3,2)"]
    assert seifert_degree(g) == 2 - Fraction(5, 8) - Fraction(1, 3) - Fraction(2, 3)


def test_pp_ellittico():
    """Cono ellittico: numeratore nullo."""
    assert canonical_pp(StarGraph(1, 3, ())) == 0


@pytest.mark.parametrize("d", range(3, 13))
def test_pp_fermat(d):
    """Cono su una curva piana liscia di grado d: -P·P = d(d-3)²."""
    g = family_fermat(d)
    assert g.genus == (d - 1) * (d - 2) // 2
    assert canonical_pp(g) == d * (d - 3) ** 2
    if d >= 4:
        assert ganter_bound(g, d - 3) == 42 * d * (d - 3)


def test_pp_non_definito():
    g = StarGraph(0, 1, ((2,), (2,), (2,)), verifica_definitezza=False)
    with pytest.raises(NonDefiniteError):
        canonical_pp(g)


@pytest.mark.parametrize("epsilon", [0, -1, 1.5, True])
def test_ganter_epsilon_non_valido(d237, epsilon):
    with pytest.raises(ArithmeticDomainError):
        ganter_bound(d237, epsilon)


def test_seifert_pair():
    assert SeifertPair.parse("7/3") == SeifertPair(7, 3)
    assert SeifertPair.parse("(7,3)") == SeifertPair(7, 3)
    assert SeifertPair(8, 5).chain() == [2, 3, 2]
    for testo in ("3/3", "4/2", "x", "1/2/3"):
        with pytest.raises(ArithmeticDomainError):
            SeifertPair.parse(testo)


def test_bordo_log_canonico():
    """Rami (3,3,3): numeratore nullo, il limite di Ganter è vuoto."""
    g = StarGraph(0, 2, ((3,), (3,), (3,)))
    assert orbifold_euler_characteristic(g) == 0
    assert canonical_pp(g) == 0
    assert ganter_bound(g, 1) == 0


def test_ganter_lineare_in_epsilon(d237):
    assert ganter_bound(d237, 2) == Fraction(1, 2)
