"""
Invarianti di Seifert e invarianti razionali in forma chiusa.

Tutta l'aritmetica è razionale esatta (fractions.Fraction).
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List

from singstar.core.errors import ArithmeticDomainError, NonDefiniteError
from singstar.core.hirzebruch_jung import hj_evaluate, hj_expand
from singstar.graphs.star_graph import StarGraph

logger = logging.getLogger(__name__)

# Valore razionale esatto, sempre ridotto con denominatore positivo.
RationalInvariant = Fraction

GANTER_CAVEAT = "formula value; 'not log-canonical' hypothesis not verified"


@dataclass(frozen=True, order=True)
class SeifertPair:
    """
    Coppia di Seifert (α, β) di un ramo.

    Attributes:
        alpha: α > β
        beta: β > 0, coprimo con α
    """

    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if not 0 < self.beta < self.alpha:
            raise ArithmeticDomainError(
                f"coppia di Seifert non valida: serve 0 < β < α, ricevuto ({self.alpha},{self.beta})"
            )
        if gcd(self.alpha, self.beta) != 1:
            raise ArithmeticDomainError(
                f"coppia di Seifert non ridotta: ({self.alpha},{self.beta})"
            )

    @classmethod
    def parse(cls, testo: str) -> "SeifertPair":
        """Legge `a/b` oppure `(a,b)`."""
        pulito = testo.strip().strip("()").replace(",", "/")
        parti = pulito.split("/")
        if len(parti) != 2:
            raise ArithmeticDomainError(f"coppia di Seifert non valida: {testo!r}")
        try:
            return cls(int(parti[0]), int(parti[1]))
        except ValueError as exc:
            if isinstance(exc, ArithmeticDomainError):
                raise
            raise ArithmeticDomainError(f"coppia di Seifert non valida: {testo!r}") from exc

    def chain(self) -> List[int]:
        return hj_expand(self.alpha, self.beta)

    def __str__(self) -> str:
        return f"({self.alpha},{self.beta})"


def seifert_pairs(grafo: StarGraph) -> List[SeifertPair]:
    """Coppie (α_i, β_i) = hj_evaluate(ramo i), nell'ordine dei rami."""
    return [SeifertPair(*hj_evaluate(ramo.weights)) for ramo in grafo.branches]


def seifert_degree(grafo: StarGraph) -> RationalInvariant:
    """b - Σ β_i/α_i."""
    return grafo.grado_orbifold()


def orbifold_euler_characteristic(grafo: StarGraph) -> RationalInvariant:
    """2 - 2g - Σ (1 - 1/α_i)."""
    chi = Fraction(2 - 2 * grafo.genus)
    for coppia in seifert_pairs(grafo):
        chi -= 1 - Fraction(1, coppia.alpha)
    return chi


def canonical_pp(grafo: StarGraph) -> RationalInvariant:
    """
    Invariante -P·P = (2g - 2 + r - Σ 1/α_i)² / (b - Σ β_i/α_i).

    Raises:
        NonDefiniteError: se il denominatore non è positivo (solo per
            grafi costruiti senza verifica di definitezza)
    """
    grado = seifert_degree(grafo)
    if grado <= 0:
        raise NonDefiniteError(f"b - Σβ/α = {grado} non positivo")
    numeratore = -orbifold_euler_characteristic(grafo)
    valore = numeratore ** 2 / grado
    logger.debug("canonical_pp: numeratore %s, grado %s -> %s", numeratore, grado, valore)
    return valore


def ganter_bound(grafo: StarGraph, epsilon: int) -> RationalInvariant:
    """
    Limite di Ganter 42·(-P·P)/ε.

    L'ipotesi "non log-canonica" non viene verificata: il valore è quello
    della formula (vedi GANTER_CAVEAT).

    Args:
        grafo: Grafo a stella valido
        epsilon: Grado della forma, intero >= 1
    """
    if isinstance(epsilon, bool) or not isinstance(epsilon, int):
        raise ArithmeticDomainError(f"epsilon deve essere intero, ricevuto {epsilon!r}")
    if epsilon <= 0:
        raise ArithmeticDomainError(
            f"il limite di Ganter richiede epsilon >= 1, ricevuto {epsilon}"
        )
    return 42 * canonical_pp(grafo) / epsilon


__all__ = [
    "GANTER_CAVEAT",
    "RationalInvariant",
    "SeifertPair",
    "canonical_pp",
    "ganter_bound",
    "hj_evaluate",
    "hj_expand",
    "orbifold_euler_characteristic",
    "seifert_degree",
    "seifert_pairs",
]
