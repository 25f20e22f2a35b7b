"""
Modulo Report Generator - Resa dei report in testo, markdown e JSON.

Ogni report è una lista ordinata di coppie (chiave, valore). Il testo
`chiave: valore` è il formato stabile per script e confronti; nessun
report contiene date o dati dipendenti dall'ambiente.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple, Union

from jinja2 import Template

from singstar.core.config import FormatoOutput
from singstar.core.errors import SingstarError

Voci = Sequence[Tuple[str, str]]


class GeneratoreReport:
    """
    Generatore di report per invarianti, simmetrie e quozienti.
    """

    TEMPLATE_TESTO = """{% for chiave, valore in voci %}{{ chiave }}: {{ valore }}
{% endfor %}"""

    TEMPLATE_MARKDOWN = """# {{ titolo }}

| key | value |
|-----|-------|
{% for chiave, valore in voci %}| {{ chiave }} | {{ valore }} |
{% endfor %}"""

    def __init__(self):
        """Inizializza il generatore."""
        self.template_testo = Template(self.TEMPLATE_TESTO, keep_trailing_newline=True)
        self.template_markdown = Template(self.TEMPLATE_MARKDOWN, keep_trailing_newline=True)

    @staticmethod
    def come_dizionario(voci: Voci) -> Dict[str, Any]:
        """Chiavi ripetute (ad esempio `note`) diventano liste."""
        risultato: Dict[str, Any] = {}
        for chiave, valore in voci:
            if chiave not in risultato:
                risultato[chiave] = valore
            elif isinstance(risultato[chiave], list):
                risultato[chiave].append(valore)
            else:
                risultato[chiave] = [risultato[chiave], valore]
        return risultato

    def render(
        self,
        voci: Voci,
        formato: Union[FormatoOutput, str] = FormatoOutput.TEXT,
        titolo: str = "singstar",
    ) -> str:
        """
        Rende il report nel formato richiesto.

        Args:
            voci: Coppie (chiave, valore) già formattate
            formato: text, markdown oppure json
            titolo: Titolo (solo markdown e json)

        Returns:
            Testo terminato da newline
        """
        try:
            formato = FormatoOutput(formato)
        except ValueError:
            raise SingstarError(f"Formato non supportato: {formato}") from None

        voci = [(str(k), str(v)) for k, v in voci]
        if formato is FormatoOutput.TEXT:
            return self.template_testo.render(voci=voci)
        if formato is FormatoOutput.MARKDOWN:
            return self.template_markdown.render(titolo=titolo, voci=voci)
        contenuto = {"title": titolo, **self.come_dizionario(voci)}
        return json.dumps(contenuto, indent=2, ensure_ascii=False) + "\n"

    @staticmethod
    def esporta_json(
        risultati: Union[Dict[str, Any], List[Dict[str, Any]]],
        filepath: Union[str, Path],
    ) -> None:
        """
        Esporta risultati in formato JSON.

        Args:
            risultati: Dizionario o lista di dizionari con risultati
            filepath: Percorso file output
        """
        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(risultati, f, indent=2, ensure_ascii=False)
