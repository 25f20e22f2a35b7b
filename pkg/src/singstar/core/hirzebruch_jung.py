"""
Frazioni continue di Hirzebruch-Jung (convenzione con il segno meno).

    n/q = c1 - 1/(c2 - 1/(... - 1/ck)),   ci >= 2
"""

from math import gcd
from typing import List, Sequence, Tuple

from singstar.core.errors import ArithmeticDomainError


def hj_expand(n: int, q: int) -> List[int]:
    """
    Sviluppa n/q in frazione continua di Hirzebruch-Jung.

    Args:
        n: Numeratore, n >= 2
        q: Denominatore, 0 < q < n, gcd(n, q) = 1

    Returns:
        Lista [c1, ..., ck] con ogni ci >= 2

    Example:
        >>> hj_expand(8, 5)
        [2, 3, 2]
    """
    if n == 1:
        raise ArithmeticDomainError("n = 1 è un punto liscio: usare la catena vuota")
    if not 0 < q < n:
        raise ArithmeticDomainError(f"serve 0 < q < n, ricevuto n={n}, q={q}")
    if gcd(n, q) != 1:
        raise ArithmeticDomainError(f"n={n} e q={q} non sono coprimi")

    pesi: List[int] = []
    while q > 0:
        c = -(-n // q)
        pesi.append(c)
        n, q = q, c * q - n
    return pesi


def hj_evaluate(pesi: Sequence[int]) -> Tuple[int, int]:
    """
    Valuta una catena di pesi >= 2 nella coppia ridotta (n, q), 0 < q < n.

    Example:
        >>> hj_evaluate([3, 2, 3])
        (12, 5)
    """
    if len(pesi) == 0:
        raise ArithmeticDomainError("catena vuota")
    for peso in pesi:
        if peso < 2:
            raise ArithmeticDomainError(f"peso {peso} < 2 nella catena {list(pesi)}")

    # dal fondo: n/q = c - q'/n' con (n', q') la coda
    n, q = 1, 0
    for c in reversed(pesi):
        n, q = c * n - q, n
    return n, q
