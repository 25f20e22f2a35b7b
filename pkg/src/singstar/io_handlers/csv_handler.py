"""
Modulo CSV Handler - Export tabellare degli invarianti di più stelle.

Una riga per file, con pandas; il formato xlsx usa openpyxl.
"""

import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Union

import pandas as pd

from singstar.core.errors import SingstarError
from singstar.invariants.lattice import LIMITE_AUTOMORFISMI
from singstar.invariants.riepilogo import summarize
from singstar.io_handlers.formati import load_star

logger = logging.getLogger(__name__)


class CSVHandler:
    """Gestore dell'export batch degli invarianti."""

    COLONNE = [
        "file",
        "genus",
        "central_weight",
        "branches",
        "seifert_pairs",
        "seifert_degree",
        "pp",
        "orbifold_euler",
        "determinant",
        "invariant_factors",
        "discriminant_group",
        "link_homology",
        "free_rank",
        "aut_gamma_order",
        "faithful",
        "ganter_bound",
        "error",
    ]

    @staticmethod
    def calcola_invarianti(
        percorsi: Iterable[Union[str, Path]],
        epsilon: Optional[int] = None,
        limite: int = LIMITE_AUTOMORFISMI,
    ) -> List[Dict[str, Any]]:
        """
        Invarianti di ogni file di stella.

        Un file non valido produce una riga con la sola colonna `error`.

        Args:
            percorsi: File di stelle
            epsilon: Grado della forma per il limite di Ganter (facoltativo)
            limite: Massimo |Aut Γ| per il test di fedeltà

        Returns:
            Lista di dizionari, uno per file, nell'ordine ricevuto
        """
        risultati = []
        for percorso in percorsi:
            riga: Dict[str, Any] = {"file": Path(percorso).name}
            try:
                grafo = load_star(percorso)
                riga.update(summarize(grafo, epsilon, limite).as_record())
            except (SingstarError, OSError) as exc:
                logger.warning("%s: %s", percorso, exc)
                riga["error"] = str(exc)
            risultati.append(riga)
        return risultati

    @classmethod
    def esporta_risultati(
        cls,
        risultati: List[Dict[str, Any]],
        filepath: Union[str, Path],
        formato: str = "csv",
    ) -> None:
        """
        Esporta i risultati su file.

        Args:
            risultati: Lista di dizionari con risultati
            filepath: Percorso file output
            formato: "csv" oppure "xlsx" (anche "excel")
        """
        df = pd.DataFrame(risultati).reindex(columns=cls.COLONNE)

        if formato.lower() == "csv":
            df.to_csv(filepath, index=False, encoding="utf-8")
        elif formato.lower() in ["excel", "xlsx"]:
            df.to_excel(filepath, index=False, engine="openpyxl")
        else:
            raise SingstarError(f"Formato non supportato: {formato}")
        logger.debug("esportate %d righe in %s", len(df), filepath)

    @staticmethod
    def leggi_risultati(filepath: Union[str, Path]) -> pd.DataFrame:
        """Rilegge un export CSV; le colonne restano testuali."""
        df = pd.read_csv(filepath, encoding="utf-8", dtype=str, keep_default_na=False)
        df.columns = df.columns.str.strip()
        return df
