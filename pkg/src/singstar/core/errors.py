"""
Gerarchia delle eccezioni di dominio.

Tutte le eccezioni derivano da ValueError: il chiamante che intercetta
ValueError continua a funzionare, la CLI distingue gli errori di sintassi
(uscita 2) dagli errori di dominio (uscita 1).
"""

from typing import Optional


class SingstarError(ValueError):
    """Errore di dominio generico."""


class GraphSyntaxError(SingstarError):
    """
    Errore di sintassi in un file di testo.

    Attributes:
        riga: Numero di riga (1-based)
        colonna: Numero di colonna (1-based)
    """

    def __init__(self, messaggio: str, riga: int, colonna: int = 1):
        self.messaggio = messaggio
        self.riga = riga
        self.colonna = colonna
        super().__init__(f"line {riga}, column {colonna}: {messaggio}")


class InvariantViolation(SingstarError):
    """Un invariante del grafo non è rispettato."""

    codice = "invariant"


class BranchWeightError(InvariantViolation):
    codice = "branch_weight"


class TooFewBranchesError(InvariantViolation):
    codice = "too_few_branches"


class NonDefiniteError(InvariantViolation):
    codice = "not_definite"


class ArithmeticDomainError(SingstarError):
    """Precondizione aritmetica violata (frazioni, punti, mappe)."""


class OptionsError(SingstarError):
    """Opzioni incompatibili con la forma del grafo."""


class QuotientError(SingstarError):
    """Annotazione di azione non coerente."""

    def __init__(self, messaggio: str, curva: Optional[int] = None):
        self.curva = curva
        if curva is not None:
            messaggio = f"curve {curva}: {messaggio}"
        super().__init__(messaggio)


class FixedLocusError(QuotientError):
    """Punto fisso non isolato senza curva puntualmente fissa."""


class DivisibilityError(QuotientError):
    """Il peso dell'immagine non è intero."""


class SwapError(QuotientError):
    """Scambio di curve non compatibile con pesi o adiacenze."""
