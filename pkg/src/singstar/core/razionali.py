"""Formattazione e lettura di razionali esatti."""

from fractions import Fraction
from typing import Union

from singstar.core.errors import ArithmeticDomainError


def format_rational(valore: Union[int, Fraction]) -> str:
    """
    Formatta un razionale come `p/q` ridotto, oppure `p` se q = 1.

    Example:
        >>> format_rational(Fraction(2, 84))
        '1/42'
    """
    valore = Fraction(valore)
    if valore.denominator == 1:
        return str(valore.numerator)
    return f"{valore.numerator}/{valore.denominator}"


def parse_rational(testo: str) -> Fraction:
    """
    Legge un razionale scritto come `a/b` o `a`.

    Raises:
        ArithmeticDomainError: se il testo non è un razionale o b = 0
    """
    testo = testo.strip()
    try:
        if "/" in testo:
            num, den = testo.split("/", 1)
            if int(den) == 0:
                raise ArithmeticDomainError(f"denominatore nullo in {testo!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(testo))
    except ValueError as exc:
        if isinstance(exc, ArithmeticDomainError):
            raise
        raise ArithmeticDomainError(f"razionale non valido: {testo!r}") from exc
